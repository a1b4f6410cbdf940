//! The term language of l-pregroups: syntax trees, a parser and printer,
//! derived symbols, the axiom schemas and evaluation in a [`Model`].

mod ast;
pub mod builders;
mod eval;
mod model;
mod parser;

pub use ast::{Equation, Relation, Term};
pub use builders::{
    axiom_commute, axiom_join, axiom_periodic, bracket, conj, delta_term, gamma_term, iter_l,
    norm_term, power, sigma_term,
};
pub use eval::{eval, relation_holds, Evaluator, Program};
pub use model::Model;
pub use parser::{parse, parse_equation};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            Just(Term::One),
            prop::sample::select(vec!["x", "y", "z", "w1", "long_name"]).prop_map(Term::var),
        ];
        leaf.prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.mul(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.meet(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.join(b)),
                inner.clone().prop_map(Term::resl),
                inner.prop_map(Term::resr),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(t in arb_term()) {
            let printed = t.to_string();
            prop_assert_eq!(parse(&printed).unwrap(), t, "printed as {}", printed);
        }

        #[test]
        fn equation_round_trip(a in arb_term(), b in arb_term(), leq in any::<bool>()) {
            let e = if leq { Equation::leq(a, b) } else { Equation::eq(a, b) };
            prop_assert_eq!(parse_equation(&e.to_string()).unwrap(), e);
        }
    }
}
