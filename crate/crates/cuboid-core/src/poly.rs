//! Sparse multivariate polynomials over the rationals in the seven fixed
//! variables `x1, x2, x3, d1, d2, d3, L`, together with the residual
//! templates and the cofactor certificates connecting the two residual
//! families.
//!
//! Monomials are ordered graded-lexicographically (total degree first, then
//! the exponent vector in the fixed variable order), and polynomials are
//! stored as ordered term maps with no zero coefficients, so structural
//! equality is mathematical equality. Templates are built from frozen
//! expanded term tables, not from each other; the certificates then prove
//! symbolically, by genuine polynomial multiplication, that each `tp` really
//! is the stated cofactor combination of `p0..p3`.
//!
//! Certificates are data. Each one serializes to JSON as
//!
//! ```json
//! {"target": [<term>...], "cofactors": [[<term>...], ...], "includes_p0": bool}
//! ```
//!
//! where a term is `{"exps": [e1,...,e7], "num": "...", "den": "..."}` and
//! terms are listed leading-first. When `includes_p0` is set the first
//! cofactor multiplies `p0` and three more follow for `p1..p3`; otherwise
//! exactly three cofactors are present.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::perm::Permutation3;
use crate::tuple::Tuple;
use crate::{Error, Int, Rat, Result};

pub const NUM_VARS: usize = 7;
pub const VAR_NAMES: [&str; NUM_VARS] = ["x1", "x2", "x3", "d1", "d2", "d3", "L"];

/// Exponent vector in the fixed variable order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: [u16; NUM_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; NUM_VARS] };

    pub fn new(exps: [u16; NUM_VARS]) -> Self {
        Monomial { exps }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; NUM_VARS];
        for i in 0..NUM_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { exps }
    }
}

/// Graded lexicographic order: compare total degree, then the exponent
/// vector left to right.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.exps).cmp(&(other.total_degree(), other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.total_degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in VAR_NAMES.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients in canonical form: terms
/// sorted by monomial, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(c, Monomial::ONE);
        p
    }

    /// Single variable by 0-based index in the fixed order.
    pub fn var(index: usize) -> Self {
        assert!(index < NUM_VARS, "variable index");
        let mut exps = [0u16; NUM_VARS];
        exps[index] = 1;
        MultiPoly::from_terms([(1, exps)])
    }

    /// Builds from integer-coefficient terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, [u16; NUM_VARS])>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (c, exps) in terms {
            p.add_term(Rat::from_integer(Int::from(c)), Monomial::new(exps));
        }
        p
    }

    fn add_term(&mut self, coeff: Rat, m: Monomial) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rat::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// True when the polynomial mentions the space diagonal.
    pub fn uses_space_diagonal(&self) -> bool {
        self.terms.keys().any(|m| m.exps[6] > 0)
    }

    /// Substitutes `x_i -> x_{sigma(i)}`, `d_i -> d_{sigma(i)}`, fixing `L`.
    pub fn apply_sigma(&self, sigma: &Permutation3) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut exps = [0u16; NUM_VARS];
            for i in 1..=3 {
                exps[sigma.apply(i) - 1] = m.exps[i - 1];
                exps[3 + sigma.apply(i) - 1] = m.exps[3 + i - 1];
            }
            exps[6] = m.exps[6];
            out.add_term(c.clone(), Monomial::new(exps));
        }
        out
    }
}

/// True when the polynomial is fixed by every simultaneous permutation of
/// the edge and diagonal triples.
pub fn is_multisymmetric(p: &MultiPoly) -> bool {
    Permutation3::all().iter().all(|sigma| p.apply_sigma(sigma) == *p)
}

/// Evaluates at a tuple. Requires the space diagonal only when the
/// polynomial actually mentions it.
pub fn eval_poly(p: &MultiPoly, t: &Tuple<Rat>) -> Result<Rat> {
    let l = if p.uses_space_diagonal() {
        Some(t.space_diagonal("a polynomial mentioning L")?)
    } else {
        t.l.as_ref()
    };
    let mut acc = Rat::zero();
    for (m, c) in p.terms() {
        let mut term = c.clone();
        for i in 0..NUM_VARS {
            let v = match i {
                0..=2 => t.x(i + 1),
                3..=5 => t.d(i - 2),
                _ => match l {
                    Some(l) => l,
                    None => {
                        debug_assert_eq!(m.exps[6], 0);
                        continue;
                    }
                },
            };
            for _ in 0..m.exps[i] {
                term *= v;
            }
        }
        acc += term;
    }
    Ok(acc)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        &MultiPoly::zero() - self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

/// Names of the twelve fixed polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PolyName {
    P0,
    P1,
    P2,
    P3,
    Tp1,
    Tp2,
    Tp3,
    Tp4,
    Tp5,
    Tp6,
    Tp7,
    Tp8,
}

impl PolyName {
    pub const ALL: [PolyName; 12] = [
        PolyName::P0,
        PolyName::P1,
        PolyName::P2,
        PolyName::P3,
        PolyName::Tp1,
        PolyName::Tp2,
        PolyName::Tp3,
        PolyName::Tp4,
        PolyName::Tp5,
        PolyName::Tp6,
        PolyName::Tp7,
        PolyName::Tp8,
    ];

    pub const FACTOR: [PolyName; 8] = [
        PolyName::Tp1,
        PolyName::Tp2,
        PolyName::Tp3,
        PolyName::Tp4,
        PolyName::Tp5,
        PolyName::Tp6,
        PolyName::Tp7,
        PolyName::Tp8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PolyName::P0 => "p0",
            PolyName::P1 => "p1",
            PolyName::P2 => "p2",
            PolyName::P3 => "p3",
            PolyName::Tp1 => "tp1",
            PolyName::Tp2 => "tp2",
            PolyName::Tp3 => "tp3",
            PolyName::Tp4 => "tp4",
            PolyName::Tp5 => "tp5",
            PolyName::Tp6 => "tp6",
            PolyName::Tp7 => "tp7",
            PolyName::Tp8 => "tp8",
        }
    }
}

impl std::str::FromStr for PolyName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PolyName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownPoly(s.to_string()))
    }
}

impl std::fmt::Display for PolyName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Frozen expanded term tables. Exponent order: x1, x2, x3, d1, d2, d3, L.
#[rustfmt::skip]
const TEMPLATE_TERMS: [&[(i64, [u16; NUM_VARS])]; 12] = [
    // p0 = x1^2 + x2^2 + x3^2 - L^2
    &[(1, [2, 0, 0, 0, 0, 0, 0]), (1, [0, 2, 0, 0, 0, 0, 0]), (1, [0, 0, 2, 0, 0, 0, 0]),
      (-1, [0, 0, 0, 0, 0, 0, 2])],
    // p1 = x2^2 + x3^2 - d1^2
    &[(1, [0, 2, 0, 0, 0, 0, 0]), (1, [0, 0, 2, 0, 0, 0, 0]), (-1, [0, 0, 0, 2, 0, 0, 0])],
    // p2 = x3^2 + x1^2 - d2^2
    &[(1, [0, 0, 2, 0, 0, 0, 0]), (1, [2, 0, 0, 0, 0, 0, 0]), (-1, [0, 0, 0, 0, 2, 0, 0])],
    // p3 = x1^2 + x2^2 - d3^2
    &[(1, [2, 0, 0, 0, 0, 0, 0]), (1, [0, 2, 0, 0, 0, 0, 0]), (-1, [0, 0, 0, 0, 0, 2, 0])],
    // tp1 = p0
    &[(1, [2, 0, 0, 0, 0, 0, 0]), (1, [0, 2, 0, 0, 0, 0, 0]), (1, [0, 0, 2, 0, 0, 0, 0]),
      (-1, [0, 0, 0, 0, 0, 0, 2])],
    // tp2 = 2x1^2 + 2x2^2 + 2x3^2 - d1^2 - d2^2 - d3^2
    &[(2, [2, 0, 0, 0, 0, 0, 0]), (2, [0, 2, 0, 0, 0, 0, 0]), (2, [0, 0, 2, 0, 0, 0, 0]),
      (-1, [0, 0, 0, 2, 0, 0, 0]), (-1, [0, 0, 0, 0, 2, 0, 0]), (-1, [0, 0, 0, 0, 0, 2, 0])],
    // tp3 = d1(x2^2 + x3^2) + d2(x3^2 + x1^2) + d3(x1^2 + x2^2) - d1^3 - d2^3 - d3^3
    &[(1, [0, 2, 0, 1, 0, 0, 0]), (1, [0, 0, 2, 1, 0, 0, 0]), (-1, [0, 0, 0, 3, 0, 0, 0]),
      (1, [0, 0, 2, 0, 1, 0, 0]), (1, [2, 0, 0, 0, 1, 0, 0]), (-1, [0, 0, 0, 0, 3, 0, 0]),
      (1, [2, 0, 0, 0, 0, 1, 0]), (1, [0, 2, 0, 0, 0, 1, 0]), (-1, [0, 0, 0, 0, 0, 3, 0])],
    // tp4 = x1(x2^2 + x3^2) + x2(x3^2 + x1^2) + x3(x1^2 + x2^2) - x1 d1^2 - x2 d2^2 - x3 d3^2
    &[(1, [1, 2, 0, 0, 0, 0, 0]), (1, [1, 0, 2, 0, 0, 0, 0]), (-1, [1, 0, 0, 2, 0, 0, 0]),
      (1, [0, 1, 2, 0, 0, 0, 0]), (1, [2, 1, 0, 0, 0, 0, 0]), (-1, [0, 1, 0, 0, 2, 0, 0]),
      (1, [2, 0, 1, 0, 0, 0, 0]), (1, [0, 2, 1, 0, 0, 0, 0]), (-1, [0, 0, 1, 0, 0, 2, 0])],
    // tp5 = x1 d1 (x2^2 + x3^2 - d1^2) + x2 d2 (...) + x3 d3 (...)
    &[(1, [1, 2, 0, 1, 0, 0, 0]), (1, [1, 0, 2, 1, 0, 0, 0]), (-1, [1, 0, 0, 3, 0, 0, 0]),
      (1, [0, 1, 2, 0, 1, 0, 0]), (1, [2, 1, 0, 0, 1, 0, 0]), (-1, [0, 1, 0, 0, 3, 0, 0]),
      (1, [2, 0, 1, 0, 0, 1, 0]), (1, [0, 2, 1, 0, 0, 1, 0]), (-1, [0, 0, 1, 0, 0, 3, 0])],
    // tp6 = 2x1^2 x2^2 + 2x1^2 x3^2 + 2x2^2 x3^2 - x1^2 d1^2 - x2^2 d2^2 - x3^2 d3^2
    &[(2, [2, 2, 0, 0, 0, 0, 0]), (2, [2, 0, 2, 0, 0, 0, 0]), (2, [0, 2, 2, 0, 0, 0, 0]),
      (-1, [2, 0, 0, 2, 0, 0, 0]), (-1, [0, 2, 0, 0, 2, 0, 0]), (-1, [0, 0, 2, 0, 0, 2, 0])],
    // tp7 = d1^2 (x2^2 + x3^2) + d2^2 (x3^2 + x1^2) + d3^2 (x1^2 + x2^2) - d1^4 - d2^4 - d3^4
    &[(1, [0, 2, 0, 2, 0, 0, 0]), (1, [0, 0, 2, 2, 0, 0, 0]), (-1, [0, 0, 0, 4, 0, 0, 0]),
      (1, [0, 0, 2, 0, 2, 0, 0]), (1, [2, 0, 0, 0, 2, 0, 0]), (-1, [0, 0, 0, 0, 4, 0, 0]),
      (1, [2, 0, 0, 0, 0, 2, 0]), (1, [0, 2, 0, 0, 0, 2, 0]), (-1, [0, 0, 0, 0, 0, 4, 0])],
    // tp8 = x1^2 d1^2 (x2^2 + x3^2 - d1^2) + x2^2 d2^2 (...) + x3^2 d3^2 (...)
    &[(1, [2, 2, 0, 2, 0, 0, 0]), (1, [2, 0, 2, 2, 0, 0, 0]), (-1, [2, 0, 0, 4, 0, 0, 0]),
      (1, [2, 2, 0, 0, 2, 0, 0]), (1, [0, 2, 2, 0, 2, 0, 0]), (-1, [0, 2, 0, 0, 4, 0, 0]),
      (1, [2, 0, 2, 0, 0, 2, 0]), (1, [0, 2, 2, 0, 0, 2, 0]), (-1, [0, 0, 2, 0, 0, 4, 0])],
];

static TEMPLATES: LazyLock<[MultiPoly; 12]> = LazyLock::new(|| {
    TEMPLATE_TERMS.map(|terms| MultiPoly::from_terms(terms.iter().copied()))
});

/// The named polynomial as a canonical-form template.
pub fn template(name: PolyName) -> &'static MultiPoly {
    let idx = PolyName::ALL.iter().position(|n| n == &name).expect("member");
    &TEMPLATES[idx]
}

/// Parses a name and returns its template.
pub fn template_by_name(name: &str) -> Result<&'static MultiPoly> {
    Ok(template(name.parse()?))
}

/// A claim that `target = c0*p0 + c1*p1 + c2*p2 + c3*p3` (the `c0` part only
/// when `includes_p0`). Verification re-expands the right side with real
/// polynomial arithmetic.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CofactorCertificate {
    pub target: MultiPoly,
    pub cofactors: Vec<MultiPoly>,
    pub includes_p0: bool,
}

impl CofactorCertificate {
    /// Expands the claimed combination and compares with the target. `Ok`
    /// carries the verdict; structurally malformed certificates are errors.
    pub fn verify(&self) -> Result<bool> {
        let expected = if self.includes_p0 { 4 } else { 3 };
        if self.cofactors.len() != expected {
            return Err(Error::Certificate(format!(
                "expected {expected} cofactors, found {}",
                self.cofactors.len()
            )));
        }
        let mut rhs = MultiPoly::zero();
        let quadratics: Vec<PolyName> = if self.includes_p0 {
            vec![PolyName::P0, PolyName::P1, PolyName::P2, PolyName::P3]
        } else {
            vec![PolyName::P1, PolyName::P2, PolyName::P3]
        };
        for (c, q) in self.cofactors.iter().zip(quadratics) {
            rhs = &rhs + &(c * template(q));
        }
        Ok(rhs == self.target)
    }
}

/// Verifies a certificate; see [`CofactorCertificate::verify`].
pub fn verify_certificate(cert: &CofactorCertificate) -> Result<bool> {
    cert.verify()
}

/// The built-in certificate for one of `tp1..tp8`.
pub fn builtin_certificate(name: PolyName) -> Result<CofactorCertificate> {
    let x = |i: usize| MultiPoly::var(i - 1);
    let d = |i: usize| MultiPoly::var(3 + i - 1);
    let triple = |f: &dyn Fn(usize) -> MultiPoly| vec![f(1), f(2), f(3)];
    let one = MultiPoly::constant(Rat::one());
    let (cofactors, includes_p0) = match name {
        PolyName::Tp1 => (
            vec![one, MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()],
            true,
        ),
        PolyName::Tp2 => (vec![one.clone(), one.clone(), one], false),
        PolyName::Tp3 => (triple(&d), false),
        PolyName::Tp4 => (triple(&x), false),
        PolyName::Tp5 => (triple(&|i| &x(i) * &d(i)), false),
        PolyName::Tp6 => (triple(&|i| &x(i) * &x(i)), false),
        PolyName::Tp7 => (triple(&|i| &d(i) * &d(i)), false),
        PolyName::Tp8 => (triple(&|i| &(&x(i) * &x(i)) * &(&d(i) * &d(i))), false),
        other => {
            return Err(Error::Certificate(format!(
                "{other} is a quadratic, not a certificate target"
            )))
        }
    };
    Ok(CofactorCertificate {
        target: template(name).clone(),
        cofactors,
        includes_p0,
    })
}

/// All eight built-in certificates, `tp1` first.
pub fn builtin_certificates() -> Vec<(PolyName, CofactorCertificate)> {
    PolyName::FACTOR
        .into_iter()
        .map(|n| (n, builtin_certificate(n).expect("factor name")))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: [u16; NUM_VARS],
    num: String,
    den: String,
}

impl Serialize for MultiPoly {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        // Leading term first.
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr {
                exps: m.exps,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut p = MultiPoly::zero();
        for t in terms {
            let num: Int = t.num.parse().map_err(|_| D::Error::custom(format!("bad numerator {:?}", t.num)))?;
            let den: Int = t.den.parse().map_err(|_| D::Error::custom(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            p.add_term(Rat::new(num, den), Monomial::new(t.exps));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detgen::rational_tuples;
    use crate::residuals::{eval_factor, eval_p};
    use crate::{rat, CuboidTuple};
    use proptest::prelude::*;

    #[test]
    fn template_shapes() {
        let counts = [4, 3, 3, 3, 4, 6, 9, 9, 9, 6, 9, 9];
        for (name, want) in PolyName::ALL.into_iter().zip(counts) {
            assert_eq!(template(name).term_count(), want, "{name}");
        }
        assert_eq!(template(PolyName::Tp1), template(PolyName::P0));
        assert!(template(PolyName::P0).uses_space_diagonal());
        assert!(!template(PolyName::Tp8).uses_space_diagonal());
    }

    #[test]
    fn tp2_is_the_plain_sum() {
        let sum = &(template(PolyName::P1) + template(PolyName::P2)) + template(PolyName::P3);
        assert_eq!(&sum, template(PolyName::Tp2));
        assert_eq!(sum.term_count(), 6);
        assert_eq!(sum.degree(), 2);
    }

    #[test]
    fn names_round_trip() {
        for name in PolyName::ALL {
            assert_eq!(name.as_str().parse::<PolyName>().unwrap(), name);
        }
        assert!(matches!("tp9".parse::<PolyName>(), Err(Error::UnknownPoly(_))));
        assert!(matches!("".parse::<PolyName>(), Err(Error::UnknownPoly(_))));
    }

    #[test]
    fn graded_lex_basics() {
        let m = |exps: [u16; 7]| Monomial::new(exps);
        // Degree dominates.
        assert!(m([1, 0, 0, 0, 0, 0, 0]) < m([0, 2, 0, 0, 0, 0, 0]));
        // Same degree: leftmost exponent decides.
        assert!(m([2, 0, 0, 0, 0, 0, 0]) > m([1, 1, 0, 0, 0, 0, 0]));
        assert!(m([1, 1, 0, 0, 0, 0, 0]) > m([0, 2, 0, 0, 0, 0, 0]));
        assert!(m([0, 0, 0, 1, 0, 0, 0]) > m([0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(m([0; 7]).total_degree(), 0);
    }

    #[test]
    fn sigma_orbit_of_p1() {
        let p1 = template(PolyName::P1);
        let mut orbit: Vec<MultiPoly> = Vec::new();
        for s in Permutation3::all() {
            let q = p1.apply_sigma(&s);
            if !orbit.contains(&q) {
                orbit.push(q);
            }
        }
        assert_eq!(orbit.len(), 3);
        for q in [PolyName::P1, PolyName::P2, PolyName::P3] {
            assert!(orbit.contains(template(q)), "{q} in orbit");
        }
        // The transposition swapping axes 1 and 2 sends p1 to p2.
        let swap12 = Permutation3::from_images([2, 1, 3]).unwrap();
        assert_eq!(&p1.apply_sigma(&swap12), template(PolyName::P2));
    }

    #[test]
    fn symmetric_family_is_multisymmetric_and_quadratics_are_not() {
        for name in PolyName::FACTOR {
            assert!(is_multisymmetric(template(name)), "{name}");
        }
        assert!(is_multisymmetric(template(PolyName::P0)));
        for name in [PolyName::P1, PolyName::P2, PolyName::P3] {
            assert!(!is_multisymmetric(template(name)), "{name}");
        }
        assert!(is_multisymmetric(&MultiPoly::zero()));
        assert!(is_multisymmetric(&MultiPoly::from_terms([
            (1, [1, 0, 0, 0, 0, 0, 0]),
            (1, [0, 1, 0, 0, 0, 0, 0]),
            (1, [0, 0, 1, 0, 0, 0, 0]),
        ])));
        assert!(!is_multisymmetric(&MultiPoly::var(0)));
    }

    #[test]
    fn three_cycle_fixes_tp3() {
        let c = Permutation3::from_images([2, 3, 1]).unwrap();
        assert_eq!(&template(PolyName::Tp3).apply_sigma(&c), template(PolyName::Tp3));
    }

    #[test]
    fn builtin_certificates_verify() {
        let certs = builtin_certificates();
        assert_eq!(certs.len(), 8);
        for (name, cert) in &certs {
            assert!(cert.verify().unwrap(), "{name}");
            assert_eq!(cert.includes_p0, *name == PolyName::Tp1);
        }
        assert!(builtin_certificate(PolyName::P1).is_err());
    }

    #[test]
    fn tampered_certificate_fails_cleanly() {
        let mut cert = builtin_certificate(PolyName::Tp3).unwrap();
        cert.target = &cert.target + &MultiPoly::constant(rat(1));
        assert!(!cert.verify().unwrap());

        let mut short = builtin_certificate(PolyName::Tp2).unwrap();
        short.cofactors.pop();
        assert!(matches!(short.verify(), Err(Error::Certificate(_))));
    }

    #[test]
    fn evaluation_matches_the_scalar_route() {
        let quads = [PolyName::P0, PolyName::P1, PolyName::P2, PolyName::P3];
        for t in rational_tuples(0xfeed, 60, 25, 4, true) {
            for (i, name) in quads.into_iter().enumerate() {
                assert_eq!(eval_poly(template(name), &t).unwrap(), eval_p(i, &t).unwrap());
            }
            for (k, name) in PolyName::FACTOR.into_iter().enumerate() {
                assert_eq!(eval_poly(template(name), &t).unwrap(), eval_factor(k + 1, &t).unwrap());
            }
        }
    }

    #[test]
    fn evaluation_requires_l_only_when_mentioned() {
        let t: CuboidTuple = "1,2,3,4,5,6".parse().unwrap();
        assert!(eval_poly(template(PolyName::P0), &t).is_err());
        assert_eq!(eval_poly(template(PolyName::Tp4), &t).unwrap(), rat(-126));
        assert_eq!(eval_poly(&MultiPoly::zero(), &t).unwrap(), rat(0));
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = builtin_certificate(PolyName::Tp5).unwrap();
        let json = serde_json::to_string_pretty(&cert).unwrap();
        let back: CofactorCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        assert!(back.verify().unwrap());

        // Leading term first in the serialized order: among the degree-4
        // terms of tp5 the graded-lex largest is x1^2*x2*d2.
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let first = &v["target"][0]["exps"];
        assert_eq!(first, &serde_json::json!([2, 1, 0, 0, 1, 0, 0]));
        assert_eq!(v["target"][0]["num"], "1");
        assert_eq!(v["target"][0]["den"], "1");
    }

    #[test]
    fn malformed_certificate_json_is_rejected() {
        let bad = r#"{"target": [{"exps": [0,0,0,0,0,0,0], "num": "1", "den": "0"}],
                      "cofactors": [[],[],[]], "includes_p0": false}"#;
        assert!(serde_json::from_str::<CofactorCertificate>(bad).is_err());
        let bad = r#"{"target": [{"exps": [0,0,0,0,0,0,0], "num": "x", "den": "1"}],
                      "cofactors": [[],[],[]], "includes_p0": false}"#;
        assert!(serde_json::from_str::<CofactorCertificate>(bad).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (
                -9i64..=9,
                proptest::array::uniform7(0u16..=2u16),
            ),
            0..8,
        )
        .prop_map(MultiPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, MultiPoly::zero());
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), seed in 0u64..1000) {
            let t = &rational_tuples(seed, 1, 9, 3, true)[0];
            let ea = eval_poly(&a, t).unwrap();
            let eb = eval_poly(&b, t).unwrap();
            prop_assert_eq!(eval_poly(&(&a + &b), t).unwrap(), &ea + &eb);
            prop_assert_eq!(eval_poly(&(&a * &b), t).unwrap(), &ea * &eb);
        }

        #[test]
        fn sigma_action_is_an_action(a in arb_poly(), i in 0usize..6, j in 0usize..6) {
            let all = Permutation3::all();
            let (s, t) = (all[i], all[j]);
            prop_assert_eq!(a.apply_sigma(&s.compose(&t)), a.apply_sigma(&t).apply_sigma(&s));
            prop_assert_eq!(a.apply_sigma(&Permutation3::IDENTITY), a);
        }

        #[test]
        fn sigma_evaluation_adjunction(a in arb_poly(), seed in 0u64..1000, i in 0usize..6) {
            let t = &rational_tuples(seed, 1, 9, 3, true)[0];
            let sigma = Permutation3::all()[i];
            prop_assert_eq!(
                eval_poly(&a.apply_sigma(&sigma), t).unwrap(),
                eval_poly(&a, &t.permuted(&sigma)).unwrap()
            );
        }
    }
}
