use mixcage::field::{find_irreducible, FieldContext, FieldElement, Polynomial, PrimePower};
use proptest::prelude::*;

fn prime_powers_to(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&n| PrimePower::new(n).is_ok())
        .collect()
}

/// Field order plus two packed elements, each below that order.
fn field_and_pair() -> impl Strategy<Value = (u64, u32, u32)> {
    prop::sample::select(prime_powers_to(64)).prop_flat_map(|q| (Just(q), 0..q as u32, 0..q as u32))
}

fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
}

#[test]
fn prime_power_classification_matches_trial_factoring() {
    for n in 2..=300u64 {
        let mut m = n;
        let p = (2..=n).find(|d| m % d == 0).unwrap();
        while m % p == 0 {
            m /= p;
        }
        assert_eq!(PrimePower::new(n).is_ok(), m == 1, "n = {n}");
        if let Ok(pp) = PrimePower::new(n) {
            assert!(naive_is_prime(u64::from(pp.p())));
            assert_eq!(u64::from(pp.p()).pow(pp.k()), n);
        }
    }
}

#[test]
fn xi_generates_every_field_up_to_64() {
    for q in prime_powers_to(64) {
        let ctx = FieldContext::for_order(q).unwrap();
        assert_eq!(ctx.multiplicative_order(ctx.xi()).unwrap(), q as u32 - 1);
        let mut seen = std::collections::HashSet::new();
        let mut a = FieldElement::ONE;
        for _ in 0..q - 1 {
            assert!(seen.insert(a), "xi repeats early in GF({q})");
            a = ctx.mul(a, ctx.xi());
        }
        assert_eq!(a, FieldElement::ONE);
        for a in ctx.elements().skip(1) {
            assert_eq!(ctx.exp(ctx.log(a).unwrap()), a);
        }
    }
}

#[test]
fn moduli_are_irreducible_and_smallest() {
    for q in prime_powers_to(64) {
        let pp = PrimePower::new(q).unwrap();
        let modulus = find_irreducible(pp.p(), pp.k());
        assert!(modulus.is_monic() && modulus.is_irreducible());
        assert_eq!(modulus.degree(), Some(pp.k() as usize));
        // No monic polynomial of the same degree with a smaller packed
        // coefficient vector is irreducible.
        let p = pp.p();
        let low = modulus
            .coefficients()
            .iter()
            .take(pp.k() as usize)
            .rev()
            .fold(0u32, |acc, &c| acc * p + c);
        for packed in 0..low {
            let mut coeffs: Vec<u32> = (0..pp.k()).map(|i| packed / p.pow(i) % p).collect();
            coeffs.push(1);
            assert!(!Polynomial::new(p, coeffs).is_irreducible());
        }
    }
}

#[test]
fn gf8_modulus_and_generator() {
    let ctx = FieldContext::for_order(8).unwrap();
    assert_eq!(ctx.modulus().to_string(), "x^3 + x + 1");
    assert_eq!(ctx.render(ctx.xi()), "x");
}

proptest! {
    #[test]
    fn log_turns_products_into_sums((q, a, b) in field_and_pair()) {
        let ctx = FieldContext::for_order(q).unwrap();
        let (a, b) = (ctx.element(a).unwrap(), ctx.element(b).unwrap());
        prop_assume!(!a.is_zero() && !b.is_zero());
        let n = ctx.group_order();
        let lhs = ctx.log(ctx.mul(a, b)).unwrap().0;
        let rhs = (ctx.log(a).unwrap().0 + ctx.log(b).unwrap().0) % n;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_axioms((q, a, b) in field_and_pair()) {
        let ctx = FieldContext::for_order(q).unwrap();
        let (a, b) = (ctx.element(a).unwrap(), ctx.element(b).unwrap());
        prop_assert_eq!(ctx.add(a, b), ctx.add(b, a));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), FieldElement::ZERO);
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        prop_assert_eq!(ctx.mul(a, FieldElement::ONE), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElement::ONE);
            prop_assert_eq!(ctx.pow(a, i64::from(ctx.group_order())).unwrap(), FieldElement::ONE);
            prop_assert_eq!(ctx.mul(ctx.div(b, a).unwrap(), a), b);
        }
    }

    #[test]
    fn distributivity((q, a, b) in field_and_pair(), c in 0u32..64) {
        let ctx = FieldContext::for_order(q).unwrap();
        let (a, b) = (ctx.element(a).unwrap(), ctx.element(b).unwrap());
        let c = ctx.element(c % q as u32).unwrap();
        prop_assert_eq!(
            ctx.mul(a, ctx.add(b, c)),
            ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        );
    }
}
