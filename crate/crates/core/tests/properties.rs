use proptest::prelude::*;

use ftlb_core::coeff::{parse_scalar, sc, Scalar};
use ftlb_core::coxeterb::{Gen, SignedPermutation};
use ftlb_core::cyclic::CyclicFunction;
use ftlb_core::markov::{trace, TraceParams};
use ftlb_core::ybalgebra::{AlgebraElement, Letter};

/// Small rational functions in `u`, `v`, `z`.
fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (-3i64..=3, -2i32..=2, -2i32..=2, 0i32..=2)
        .prop_map(|(c, a, b, e)| sc::int(c).mul(&sc::upow(a)).mul(&sc::vpow(b)).mul(&sc::z().pow(e).unwrap()));
    let poly = prop::collection::vec(term, 1..4).prop_map(|ts| ts.iter().fold(Scalar::zero(), |a, t| a.add(t)));
    let den = (1i64..=3, 0i32..=2, prop::bool::ANY).prop_map(|(c, k, which)| {
        let base = if which { sc::upow(2).add(&sc::int(1)) } else { sc::v().add(&sc::int(c)) };
        base.pow(k).unwrap()
    });
    (poly, den).prop_map(|(p, q)| p.div(&q).unwrap())
}

fn letter(n: usize, d: u32) -> impl Strategy<Value = Letter> {
    let g = (1..n.max(2), prop::bool::ANY).prop_map(|(i, inv)| if inv { Letter::GInv(i) } else { Letter::G(i) });
    let b = prop::bool::ANY.prop_map(|inv| if inv { Letter::BInv } else { Letter::B });
    let t = (1..=n, 1..d.max(2) as i64).prop_map(|(j, k)| Letter::T(j, k));
    match (n > 1, d > 1) {
        (true, true) => prop_oneof![g, b, t].boxed(),
        (true, false) => prop_oneof![g, b].boxed(),
        (false, true) => prop_oneof![b, t].boxed(),
        (false, false) => b.boxed(),
    }
}

fn words(k: usize) -> impl Strategy<Value = (usize, u32, Vec<Vec<Letter>>)> {
    (1usize..=3, 1u32..=2).prop_flat_map(move |(n, d)| {
        let w = prop::collection::vec(letter(n, d), 0..5);
        (Just(n), Just(d), prop::collection::vec(w, k))
    })
}

fn cyclic(d: u32) -> impl Strategy<Value = CyclicFunction> {
    prop::collection::vec(scalar(), d as usize).prop_map(CyclicFunction::new)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert!(a.add(&b).add(&c).equals(&a.add(&b.add(&c))));
        prop_assert!(a.mul(&b).equals(&b.mul(&a)));
        prop_assert!(a.mul(&b.add(&c)).equals(&a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).equals(&Scalar::one()));
        }
    }

    #[test]
    fn scalar_text_round_trips(a in scalar()) {
        let text = a.to_string();
        let back = parse_scalar(&text).unwrap();
        prop_assert!(back.equals(&a));
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn length_changes_by_one(w in (1usize..=3).prop_flat_map(|n| (Just(n), prop::sample::select(SignedPermutation::all(n))))) {
        let (n, w) = w;
        let l = w.length();
        prop_assert_eq!(w.inverse().length(), l);
        let mut gens = vec![Gen::R];
        gens.extend((1..n).map(Gen::S));
        for g in gens {
            let l2 = w.mul_gen(g).length();
            prop_assert!(l2 == l + 1 || l2 + 1 == l);
            prop_assert_eq!(w.right_descent(g), l2 < l);
        }
    }

    #[test]
    fn products_are_associative_and_respect_concatenation((n, d, ws) in words(3)) {
        let e: Vec<AlgebraElement> = ws.iter().map(|w| AlgebraElement::from_word(n, d, w).unwrap()).collect();
        let left = e[0].mul(&e[1]).unwrap().mul(&e[2]).unwrap();
        let right = e[0].mul(&e[1].mul(&e[2]).unwrap()).unwrap();
        prop_assert!(left.equals(&right));
        let cat: Vec<Letter> = ws[0].iter().chain(&ws[1]).copied().collect();
        prop_assert!(AlgebraElement::from_word(n, d, &cat).unwrap().equals(&e[0].mul(&e[1]).unwrap()));
    }

    #[test]
    fn inverse_letters_cancel((n, d, ws) in words(1), pos in 0usize..5, l in (1usize..=3, 1u32..=2).prop_flat_map(|(n, d)| letter(n, d))) {
        let w = &ws[0];
        prop_assume!(l.check(n).is_ok());
        let at = pos.min(w.len());
        let mut longer = w.clone();
        longer.splice(at..at, [l, l.inverse()]);
        let a = AlgebraElement::from_word(n, d, w).unwrap();
        prop_assert!(AlgebraElement::from_word(n, d, &longer).unwrap().equals(&a));
    }

    #[test]
    fn trace_is_conjugation_invariant((n, d, ws) in words(2)) {
        let p = TraceParams::symbolic(d);
        let a = AlgebraElement::from_word(n, d, &ws[0]).unwrap();
        let b = AlgebraElement::from_word(n, d, &ws[1]).unwrap();
        let ab = trace(&a.mul(&b).unwrap(), &p).unwrap();
        let ba = trace(&b.mul(&a).unwrap(), &p).unwrap();
        prop_assert!(ab.equals(&ba));
    }

    #[test]
    fn convolution_theorem((f, g) in (1u32..=4).prop_flat_map(|d| (cyclic(d), cyclic(d)))) {
        let lhs = f.convolve(&g).unwrap().fourier();
        let rhs = f.fourier().pointwise(&g.fourier()).unwrap();
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn double_transform_reflects(f in (1u32..=4).prop_flat_map(cyclic)) {
        let d = f.d() as i64;
        let ff = f.fourier().fourier();
        for k in 0..d {
            prop_assert!(ff.at(k).equals(&f.at(-k).mul(&sc::int(d))));
        }
    }
}
