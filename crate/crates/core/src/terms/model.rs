use std::fmt::Debug;

use crate::error::Result;

/// An l-pregroup that terms can be interpreted in.
///
/// Element equality (`PartialEq`) must be semantic equality inside the model;
/// implementations keep their elements in a canonical form.
pub trait Model: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// Short name such as `F3` or `Lex1xF2`.
    fn name(&self) -> String;

    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn resl(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn resr(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;

    /// Literal text for an element; `parse_elem` reads it back.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
}
