use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::simplicial::{connected_components, Components, PLMap, Subcomplex};

/// Sign of `f` on each component of a superlevel subcomplex (`n = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector {
    pub components: Components,
    /// `+1` or `−1` per component.
    pub signs: Vec<i8>,
}

pub fn sign_vector(f: &PLMap, level: &Subcomplex) -> Result<SignVector> {
    if f.n() != 1 {
        return Err(Error::ModeInapplicable(format!("sign vectors need n = 1, got n = {}", f.n())));
    }
    let components = connected_components(f.complex(), level);
    let mut signs = Vec::with_capacity(components.count());
    for members in &components.members {
        let sign_of = |v: usize| {
            let x = &f.value(v)[0];
            if x.is_zero() {
                0
            } else if x.is_positive() {
                1
            } else {
                -1
            }
        };
        let s = sign_of(members[0]);
        if s == 0 || members.iter().any(|&v| sign_of(v) != s) {
            return Err(Error::Invariant(format!(
                "component of `{}` does not carry a constant non-zero sign",
                f.complex().vertex_id(members[0])
            )));
        }
        signs.push(s);
    }
    Ok(SignVector { components, signs })
}

/// Two components of opposite sign lying in one component of the whole complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignWitness {
    pub positive: usize,
    pub negative: usize,
}

/// `f` restricted to the level extends to a nowhere-zero map on the whole
/// complex iff no component of the complex meets level components of both signs.
pub fn sign_obstruction(f: &PLMap, signs: &SignVector) -> Option<SignWitness> {
    let whole = connected_components(f.complex(), &Subcomplex::whole(f.complex()));
    let mut first: Vec<[Option<usize>; 2]> = vec![[None, None]; whole.count()];
    for (c, members) in signs.components.members.iter().enumerate() {
        let outer = whole.label[members[0]].expect("level vertices lie in the complex");
        let slot = usize::from(signs.signs[c] > 0);
        first[outer][slot].get_or_insert(c);
    }
    first.into_iter().find_map(|pair| match pair {
        [Some(negative), Some(positive)] => Some(SignWitness { positive, negative }),
        _ => None,
    })
}
