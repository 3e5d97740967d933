//! The symmetric group on the three axis labels.
//!
//! A permutation is stored by its images: `images[i]` is `sigma(i+1)` in
//! 1-based axis labels. Composition is `(sigma * tau)(i) = sigma(tau(i))`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Permutation3 {
    images: [usize; 3],
}

impl Permutation3 {
    pub const IDENTITY: Permutation3 = Permutation3 { images: [1, 2, 3] };

    /// Builds from 1-based images; they must be a bijection of `{1,2,3}`.
    pub fn from_images(images: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &v in &images {
            if !(1..=3).contains(&v) || seen[v - 1] {
                return Err(Error::BadPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation3 { images })
    }

    /// All six group elements, identity first, in a fixed order.
    pub fn all() -> [Permutation3; 6] {
        [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
            .map(|images| Permutation3 { images })
    }

    /// Image of a 1-based axis label.
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!((1..=3).contains(&i));
        self.images[i - 1]
    }

    pub fn images(&self) -> [usize; 3] {
        self.images
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation3) -> Permutation3 {
        Permutation3 {
            images: [1, 2, 3].map(|i| self.apply(other.apply(i))),
        }
    }

    pub fn inverse(&self) -> Permutation3 {
        let mut images = [0; 3];
        for i in 1..=3 {
            images[self.apply(i) - 1] = i;
        }
        Permutation3 { images }
    }
}

impl TryFrom<[usize; 3]> for Permutation3 {
    type Error = Error;
    fn try_from(images: [usize; 3]) -> Result<Self> {
        Permutation3::from_images(images)
    }
}

impl From<Permutation3> for [usize; 3] {
    fn from(p: Permutation3) -> [usize; 3] {
        p.images
    }
}

impl std::fmt::Display for Permutation3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} {} {})", self.images[0], self.images[1], self.images[2])
    }
}
