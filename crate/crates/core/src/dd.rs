//! Minimal double-double arithmetic.
//!
//! The norming ratios `rho_n = (a_{n-1} - a_n)/(a_n gamma_n)` and
//! `beta_n = (b_{n-1} - b_n)/(a_n gamma_n)` divide an O(a_n/n) difference by an
//! O(a_n/n) product, so input rounding of the constants is amplified by a
//! factor of n. Evaluating in plain f64 leaves ~1e-13 relative noise at
//! n ~ 10^3, which matters when a certified bound sits exactly on a tolerance
//! boundary. Carrying the constants and the ratio in unevaluated (hi, lo)
//! pairs keeps the pipeline exact to ~1e-30 whenever the constants themselves
//! are exactly representable (e.g. a_n = 1/n), with one rounding at the end.
//!
//! The same representation backs the prefix sums `Gamma_n`, so consecutive
//! differences of the accumulator reproduce each increment exactly.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns `(s, e)` with `s + e == a + b` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// `1/d` represented to double-double accuracy (exact apart from the
    /// ~1e-32 tail), for exactly representable `d`.
    #[inline]
    pub fn recip(d: f64) -> Dd {
        let hi = 1.0 / d;
        // Residual 1 - hi*d is exact in fma; dividing it by d refines the tail.
        let r = hi.mul_add(-d, 1.0);
        Dd { hi, lo: r / d }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + (self.lo + other.lo);
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        self.add(Dd::from_f64(x))
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Total order consistent with the represented real values.
    #[inline]
    pub fn gt(self, other: Dd) -> bool {
        self.hi > other.hi || (self.hi == other.hi && self.lo > other.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recip_carries_the_rounding_residual() {
        let third = Dd::recip(3.0);
        // hi is the rounded 1/3; lo recovers what rounding dropped.
        assert_eq!(third.hi, 1.0 / 3.0);
        assert!(third.lo.abs() > 0.0 && third.lo.abs() < f64::EPSILON);
        // hi + 3*lo should reconstruct 1 much better than hi alone.
        let residual = 3.0f64.mul_add(third.hi, -1.0) + 3.0 * third.lo;
        assert!(residual.abs() < 1e-30);
    }

    #[test]
    fn ratio_of_exact_reciprocals_rounds_correctly() {
        // (1/1000 - 1/1001) / (1/1001 * 1/1001) = 1001/1000 exactly.
        let a_prev = Dd::recip(1000.0);
        let a_n = Dd::recip(1001.0);
        let rho = a_prev.sub(a_n).div(a_n.mul(a_n));
        let r = rho.to_f64();
        assert_eq!(r, 1.001);
        // The defining property that motivates dd here: subtracting 1 stays
        // at or below the decimal threshold instead of overshooting it.
        assert!((r - 1.0).abs() <= 1e-3);
    }

    #[test]
    fn add_then_sub_recovers_small_increment() {
        // A large accumulator plus a tiny increment: the dd difference of the
        // two accumulator states must equal the increment exactly.
        let gamma = 9.53674316e-7; // ~2^-20, not a power of two
        let acc = Dd::from_f64(14.392_726_722_865_724);
        let next = acc.add_f64(gamma);
        let diff = next.sub(acc).to_f64();
        assert_eq!(diff, gamma);
    }

    #[test]
    fn mul_is_error_free_on_exact_products() {
        let x = Dd::from_f64(1.5);
        let y = Dd::from_f64(2.5);
        let p = x.mul(y);
        assert_eq!(p.hi, 3.75);
        assert_eq!(p.lo, 0.0);
    }
}
