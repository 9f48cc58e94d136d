//! Bounded language comparison on lasso words.

use crate::lasso::canonical_lassos;
use crate::{Error, LassoWord, OmegaAcceptor, Result};

/// First canonical lasso within the bounds on which `a` and `b` disagree, in
/// the order of [`canonical_lassos`]. `None` means no disagreement was found.
pub fn bounded_equivalence(
    a: &dyn OmegaAcceptor,
    b: &dyn OmegaAcceptor,
    stem_bound: usize,
    cycle_bound: usize,
) -> Result<Option<LassoWord>> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    for w in canonical_lassos(a.alphabet().len(), stem_bound, cycle_bound) {
        if a.accepts(&w)? != b.accepts(&w)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
