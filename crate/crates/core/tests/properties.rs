mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::LazyLock;

use fnz::checker::{check_equation, enumerate_elements, Bounds, Tails, Universe, WreathBounds};
use fnz::models::{FnModel, LexElement, LexModel, LocalFamily, WreathElement, WreathModel};
use fnz::terms::{bracket, eval, parse_equation, relation_holds, sigma_term, Equation, Term};
use fnz::variety::{self, VarietySig};
use fnz::PeriodicMap;
use num_integer::Integer;
use proptest::prelude::*;

/// Elements of `F_n` with heights in `[-3, 3]`, `n = 1..=6`.
static ELEMS: LazyLock<Vec<Vec<PeriodicMap>>> =
    LazyLock::new(|| (1..=6).map(|n| enumerate_elements(n, 3)).collect());

fn element() -> impl Strategy<Value = PeriodicMap> {
    (1..=6usize).prop_flat_map(|n| prop::sample::select(ELEMS[n - 1].clone()))
}

fn pair() -> impl Strategy<Value = (PeriodicMap, PeriodicMap)> {
    (1..=6usize).prop_flat_map(|n| {
        let e = ELEMS[n - 1].clone();
        (prop::sample::select(e.clone()), prop::sample::select(e))
    })
}

fn wreath() -> impl Strategy<Value = WreathElement> {
    let base = ELEMS[1].iter().filter(|f| f.hmax() <= 1 && f.hmin() >= -1).cloned().collect::<Vec<_>>();
    (
        -2i64..=2,
        prop::sample::select(base.clone()),
        prop::sample::select(base.clone()),
        prop::collection::btree_map(-3i64..=3, prop::sample::select(base), 0..=2),
    )
        .prop_map(|(g, l, r, exc)| WreathElement::new(g, LocalFamily::new(l, r, exc).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn period_shift_is_central(f in element()) {
        let n = f.n();
        let s = PeriodicMap::shift(n, n as i64);
        prop_assert_eq!(f.compose(&s).unwrap(), s.compose(&f).unwrap());
    }

    #[test]
    fn f_times_left_residual_is_an_idempotent_above_one(f in element()) {
        let e = f.compose(&f.resl()).unwrap();
        prop_assert!(e.is_idempotent() && e.is_positive());
        if f.is_positive() && f.is_idempotent() {
            prop_assert_eq!(e, f);
        }
    }

    #[test]
    fn positive_flat_iff_sigma_is_one(f in element()) {
        if f.is_positive() {
            prop_assert_eq!(f.is_flat(), f.sigma().is_identity());
        }
    }

    #[test]
    fn bracket_is_an_automorphism((f, g) in pair(), k in -3i64..=3) {
        let b = |x: &PeriodicMap| x.conj_shift(k);
        prop_assert_eq!(b(&f.compose(&g).unwrap()), b(&f).compose(&b(&g)).unwrap());
        prop_assert_eq!(b(&f.meet(&g).unwrap()), b(&f).meet(&b(&g)).unwrap());
        prop_assert_eq!(b(&f.join(&g).unwrap()), b(&f).join(&b(&g)).unwrap());
        prop_assert_eq!(b(&f.resl()), b(&f).resl());
        prop_assert_eq!(b(&f.resr()), b(&f).resr());
    }

    #[test]
    fn sigma_and_gamma_match_oracle(f in element()) {
        let o = oracle::Map::of(&f);
        prop_assert_eq!(oracle::Map::of(&f.sigma()), o.sigma());
        prop_assert_eq!(oracle::Map::of(&f.gamma()), o.gamma());
        prop_assert_eq!(f.sigma().resl(), f.resl().gamma());
    }

    #[test]
    fn wreath_local_elements_have_lcm_period(w in wreath()) {
        let local = WreathElement::new(0, w.local.clone());
        let by_conjugation = (1..=local.n()).find(|&k| local.conj_shift(k as i64) == local).unwrap();
        let by_components = local.local.components().fold(1, |acc, f| acc.lcm(&f.per()));
        prop_assert_eq!(local.per(), by_components);
        prop_assert_eq!(local.per(), by_conjugation);
    }

    #[test]
    fn wreath_idempotents_are_local(w in wreath()) {
        prop_assert_eq!(w.is_idempotent(), w.is_idempotent_by_components());
        if w.g != 0 {
            prop_assert!(!w.is_idempotent());
        }
    }

    #[test]
    fn wreath_elements_are_periodic(w in wreath()) {
        let n = w.n() as i64;
        prop_assert_eq!(w.conj_shift(n), w.clone());
        // x^[1] agrees with the double left residual
        prop_assert_eq!(w.conj_shift(1), w.resl().resl());
    }

    #[test]
    fn wreath_literal_round_trip(w in wreath()) {
        prop_assert_eq!(w.to_string().parse::<WreathElement>().unwrap(), w);
    }

    #[test]
    fn macro_terms_match_direct_operations(f in element(), k in -3i64..=3) {
        let n = f.n();
        let m = FnModel::new(n);
        let x = Term::var("x");
        let env = BTreeMap::from([("x".to_string(), f.clone())]);
        prop_assert_eq!(eval(&sigma_term(n, &x), &m, &env).unwrap(), f.sigma());
        prop_assert_eq!(eval(&bracket(&x, k), &m, &env).unwrap(), f.conj_shift(k));
    }
}

const EQUATIONS: [&str; 6] = [
    "x y = y x",
    "x <= x^llll",
    "x x^l = x^l x",
    "x & y <= x y",
    "(x | y)^l = x^l | y^l",
    "x^l x <= 1",
];

/// `eq` holds at an assignment iff `1 <= normalize(eq)` does.
fn normalize_agrees<M: Universe>(model: &M, bounds: &Bounds) {
    let elems = model.universe(bounds).unwrap();
    for src in EQUATIONS {
        let eq = parse_equation(src).unwrap();
        let u = eq.normalize();
        for a in &elems {
            for b in elems.iter().step_by(3) {
                let env = BTreeMap::from([("x".to_string(), a.clone()), ("y".to_string(), b.clone())]);
                let l = eval(&eq.lhs, model, &env).unwrap();
                let r = eval(&eq.rhs, model, &env).unwrap();
                let direct = relation_holds(model, eq.kind, &l, &r).unwrap();
                let normal = model.leq(&model.one(), &eval(&u, model, &env).unwrap()).unwrap();
                assert_eq!(direct, normal, "{src} in {} at {a:?}, {b:?}", model.name());
            }
        }
    }
}

#[test]
fn normalize_is_sound_in_every_model() {
    for n in 1..=3 {
        normalize_agrees(&FnModel::new(n), &Bounds::exhaustive(2));
    }
    normalize_agrees(&LexModel::new(1, 2), &Bounds { h: 1, lex: 1, ..Bounds::default() });
    let wb = WreathBounds { window: 2, global: 1, max_exceptions: 1, tails: Tails::Shared };
    normalize_agrees(&WreathModel::new(2), &Bounds { h: 1, wreath: wb, ..Bounds::default() });
}

#[test]
fn counterexamples_re_evaluate_as_violations() {
    let cases: [(&str, usize); 4] = [("x y = y x", 2), ("x <= x^ll", 3), ("x y & z = x (y & z)", 2), ("1 <= x", 1)];
    for (src, n) in cases {
        let eq: Equation = parse_equation(src).unwrap();
        let m = FnModel::new(n);
        let v = check_equation(&eq, &m, &Bounds::exhaustive(2)).unwrap();
        let c = v.counterexample().unwrap_or_else(|| panic!("{src} holds in F{n}"));
        let env: BTreeMap<String, PeriodicMap> = c.assignment.iter().cloned().collect();
        let (l, r) = (eval(&eq.lhs, &m, &env).unwrap(), eval(&eq.rhs, &m, &env).unwrap());
        assert!(!relation_holds(&m, eq.kind, &l, &r).unwrap());
        assert_eq!((l, r), (c.lhs.clone(), c.rhs.clone()));
    }
}

#[test]
fn verdicts_do_not_depend_on_threads_or_repeat_runs() {
    let eq = parse_equation("x (y | z) = x y | z").unwrap();
    let m = FnModel::new(3);
    let runs: Vec<_> = [1, 2, 3, 1]
        .into_iter()
        .map(|t| check_equation(&eq, &m, &Bounds { threads: t, ..Bounds::exhaustive(2) }).unwrap())
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let seeded = |seed| check_equation(&eq, &m, &Bounds::random(2, 500, seed)).unwrap();
    assert_eq!(seeded(7), seeded(7));
}

#[test]
fn atoms_are_conjugate() {
    for n in 2..=8 {
        let atoms = PeriodicMap::atoms(n);
        for a in &atoms {
            for b in &atoms {
                assert!((0..n as i64).any(|k| a.conj_shift(k) == *b), "{a} and {b}");
            }
        }
    }
}

#[test]
fn lex_elements_are_periodic() {
    let m = LexModel::new(2, 3);
    for e in m.universe(&Bounds { h: 1, lex: 1, ..Bounds::default() }).unwrap() {
        assert_eq!(e.conj_shift(3), e);
        assert_eq!(e.resl().resl(), e.conj_shift(1));
        let s: LexElement = e.to_string().parse().unwrap();
        assert_eq!(s, e);
    }
}

#[test]
fn variety_lattice_matches_downsets() {
    for n in [6, 12, 30] {
        let sigs = variety::subvarieties(n);
        let downs: Vec<BTreeSet<usize>> = sigs.iter().map(VarietySig::downset).collect();
        let brute: BTreeSet<BTreeSet<usize>> = oracle::divisor_downsets(n).into_iter().collect();
        assert_eq!(downs.iter().cloned().collect::<BTreeSet<_>>(), brute, "n={n}");
        for (a, da) in sigs.iter().zip(&downs) {
            for (b, db) in sigs.iter().zip(&downs) {
                assert_eq!(a.leq(b), da.is_subset(db));
                assert_eq!(&a.join(b).downset(), &(da | db));
                assert_eq!(&a.meet(b).downset(), &(da & db));
            }
        }
    }
}

#[test]
fn join_is_a_semilattice_on_divisor_subsets() {
    let ds = oracle::divisors(12);
    let subsets: Vec<VarietySig> = (0u32..1 << ds.len())
        .map(|m| VarietySig::normalize((0..ds.len()).filter(|i| m >> i & 1 == 1).map(|i| ds[i])).unwrap())
        .collect();
    for a in &subsets {
        assert_eq!(a.join(a), *a);
        for b in &subsets {
            assert_eq!(a.join(b), b.join(a));
            for c in subsets.iter().step_by(5) {
                assert_eq!(a.join(b).join(c), a.join(&b.join(c)));
            }
        }
    }
}

#[test]
fn signature_order_agrees_with_axiom_experiments() {
    for k in 1..=6 {
        for n in 1..=6 {
            let m = FnModel::new(k);
            let v = check_equation(&fnz::terms::axiom_periodic(n), &m, &Bounds::exhaustive(2)).unwrap();
            let leq = VarietySig::normalize([k]).unwrap().leq(&VarietySig::normalize([n]).unwrap());
            assert_eq!(v.holds(), leq, "k={k} n={n}");
        }
    }
}
