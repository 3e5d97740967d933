//! Variable tuples `(x1, x2, x3, d1, d2, d3 [, L])` and the axis action on
//! them.
//!
//! The space diagonal is optional: the face-diagonal system never mentions
//! it, so forcing a value would either invent data or reserve a sentinel.
//! Operations that need `L` fail loudly when it is absent.

use num_integer::Integer;
use num_traits::One;

use crate::perm::Permutation3;
use crate::{arith, Error, Int, Rat, Result};

/// Fixed variable order used for parsing, printing, serialization, and
/// polynomial exponents: `x1, x2, x3, d1, d2, d3, L`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tuple<S> {
    pub x: [S; 3],
    pub d: [S; 3],
    pub l: Option<S>,
}

impl<S> Tuple<S> {
    pub fn new(x: [S; 3], d: [S; 3]) -> Self {
        Tuple { x, d, l: None }
    }

    pub fn with_space_diagonal(x: [S; 3], d: [S; 3], l: S) -> Self {
        Tuple { x, d, l: Some(l) }
    }

    /// 1-based edge access.
    pub fn x(&self, i: usize) -> &S {
        &self.x[i - 1]
    }

    /// 1-based face-diagonal access.
    pub fn d(&self, i: usize) -> &S {
        &self.d[i - 1]
    }

    pub fn space_diagonal(&self, needed_for: &'static str) -> Result<&S> {
        self.l.as_ref().ok_or(Error::MissingSpaceDiagonal(needed_for))
    }

    /// Coordinates in the fixed variable order.
    pub fn coords(&self) -> Vec<&S> {
        let mut v: Vec<&S> = self.x.iter().chain(self.d.iter()).collect();
        if let Some(l) = &self.l {
            v.push(l);
        }
        v
    }

    /// Relabels axes: position `i` of the result reads position `sigma(i)`
    /// of `self`, for edges and face diagonals simultaneously; the space
    /// diagonal is untouched. Evaluating any expression at the result equals
    /// evaluating the sigma-substituted expression at `self`.
    pub fn permuted(&self, sigma: &Permutation3) -> Self
    where
        S: Clone,
    {
        let pick = |a: &[S; 3]| [1, 2, 3].map(|i| a[sigma.apply(i) - 1].clone());
        Tuple {
            x: pick(&self.x),
            d: pick(&self.d),
            l: self.l.clone(),
        }
    }
}

impl Tuple<Rat> {
    /// Clears denominators: multiplies every coordinate by the least common
    /// denominator and drops to integers. Every residual is homogeneous, so
    /// this preserves which residuals vanish (scaling by lambda scales a
    /// degree-k residual by lambda^k).
    pub fn cleared(&self) -> Tuple<Int> {
        let lcd = self
            .coords()
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |v: &Rat| v.numer() * (&lcd / v.denom());
        Tuple {
            x: [1, 2, 3].map(|i| scale(self.x(i))),
            d: [1, 2, 3].map(|i| scale(self.d(i))),
            l: self.l.as_ref().map(scale),
        }
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords().into_iter().map(arith::format_rat).collect()
    }
}

impl Tuple<Int> {
    pub fn to_rational(&self) -> Tuple<Rat> {
        Tuple {
            x: [1, 2, 3].map(|i| Rat::from_integer(self.x(i).clone())),
            d: [1, 2, 3].map(|i| Rat::from_integer(self.d(i).clone())),
            l: self.l.clone().map(Rat::from_integer),
        }
    }
}

impl std::str::FromStr for Tuple<Rat> {
    type Err = Error;

    /// Parses `x1,x2,x3,d1,d2,d3` or the same with `,L` appended; each
    /// coordinate is a rational literal.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 && parts.len() != 7 {
            return Err(Error::TupleArity(parts.len()));
        }
        let vals: Vec<Rat> = parts.iter().map(|p| arith::parse_rat(p)).collect::<Result<_>>()?;
        let mut it = vals.into_iter();
        let mut three = || -> [Rat; 3] {
            [(); 3].map(|_| it.next().expect("arity checked"))
        };
        Ok(Tuple {
            x: three(),
            d: three(),
            l: it.next(),
        })
    }
}

impl std::fmt::Display for Tuple<Rat> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.coord_strings().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn t7() -> Tuple<Rat> {
        "1,2,3,4,5,6,7".parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["1,2,3,4,5,6", "1,2,3,4,5,6,7", "-1/2,0,3,4/3,5,6", "44,117,240,267,244,125"] {
            let t: Tuple<Rat> = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(matches!("1,2,3".parse::<Tuple<Rat>>(), Err(Error::TupleArity(3))));
        assert!(matches!("1,2,3,4,5,6,7,8".parse::<Tuple<Rat>>(), Err(Error::TupleArity(8))));
        assert!("1,2,x,4,5,6".parse::<Tuple<Rat>>().is_err());
    }

    #[test]
    fn transposition_swaps_paired_coordinates() {
        let sigma = Permutation3::from_images([2, 1, 3]).unwrap();
        let u = t7().permuted(&sigma);
        assert_eq!(u.to_string(), "2,1,3,5,4,6,7");
    }

    #[test]
    fn identity_and_cycle_orders() {
        let t = t7();
        assert_eq!(t.permuted(&Permutation3::IDENTITY), t);
        let c = Permutation3::from_images([2, 3, 1]).unwrap();
        let thrice = t.permuted(&c).permuted(&c).permuted(&c);
        assert_eq!(thrice, t);
        assert_ne!(t.permuted(&c), t);
    }

    #[test]
    fn clearing_denominators() {
        let t: Tuple<Rat> = "1/2,2,3,4,5,6,1/3".parse().unwrap();
        let c = t.cleared();
        assert_eq!(c.x, [Int::from(3), Int::from(12), Int::from(18)]);
        assert_eq!(c.l, Some(Int::from(2)));
        // Integer tuples pass through unchanged.
        let t: Tuple<Rat> = "1,2,3,4,5,6".parse().unwrap();
        assert_eq!(c.to_rational().l, Some(rat(2)));
        assert_eq!(t.cleared().to_rational(), t);
    }

    #[test]
    fn missing_space_diagonal_is_loud() {
        let t: Tuple<Rat> = "1,2,3,4,5,6".parse().unwrap();
        assert!(matches!(
            t.space_diagonal("p0"),
            Err(Error::MissingSpaceDiagonal("p0"))
        ));
        assert_eq!(t7().space_diagonal("p0").unwrap(), &rat(7));
    }
}
