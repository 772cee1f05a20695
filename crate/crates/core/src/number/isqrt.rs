//! Integer square roots on arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Returns `(⌊√n⌋, exact)` where `exact` holds iff `n` is a perfect square.
///
/// Newton iteration from an overestimate, followed by a bracketing check
/// `r² <= n < (r+1)²` that nudges the root if the iteration ever lands off
/// by one.
///
/// Panics if `n` is negative.
pub fn isqrt(n: &BigInt) -> (BigInt, bool) {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    if n.is_zero() {
        return (BigInt::zero(), true);
    }
    let bits = n.bits();
    let mut x = BigInt::one() << ((bits + 1) / 2);
    loop {
        let next = (&x + n / &x) >> 1u32;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *n {
        x -= 1;
    }
    loop {
        let up = &x + 1;
        if &up * &up <= *n {
            x = up;
        } else {
            break;
        }
    }
    let exact = &x * &x == *n;
    (x, exact)
}

/// `Some(root)` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let (r, exact) = isqrt(n);
    exact.then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn linear_scan(n: u64) -> (u64, bool) {
        let mut r = 0u64;
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        (r, r * r == n)
    }

    #[test]
    fn small_values_match_linear_scan() {
        for n in 0..5000u64 {
            let (r, e) = isqrt(&BigInt::from(n));
            assert_eq!((r, e), {
                let (r, e) = linear_scan(n);
                (BigInt::from(r), e)
            });
        }
    }

    #[test]
    fn named_cases() {
        assert_eq!(isqrt(&BigInt::from(0)), (BigInt::from(0), true));
        assert_eq!(isqrt(&BigInt::from(837)), (BigInt::from(28), false));
        assert_eq!(isqrt(&BigInt::from(1089)), (BigInt::from(33), true));
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
    }

    #[test]
    #[should_panic]
    fn negative_panics() {
        isqrt(&BigInt::from(-1));
    }

    proptest! {
        #[test]
        fn brackets_up_to_2_128(hi in any::<u64>(), lo in any::<u64>()) {
            let n = (BigInt::from(hi) << 64u32) + BigInt::from(lo);
            let (r, exact) = isqrt(&n);
            prop_assert!(&r * &r <= n);
            let r1 = &r + 1;
            prop_assert!(n < &r1 * &r1);
            prop_assert_eq!(exact, &r * &r == n);
        }

        #[test]
        fn squares_are_exact(k in any::<u128>()) {
            let k = BigInt::from(k);
            prop_assert_eq!(isqrt(&(&k * &k)), (k, true));
        }
    }
}
