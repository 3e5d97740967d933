//! The coefficient matrix attached to a tuple, its exact rank, and the case
//! classification those ranks induce.
//!
//! For a tuple `t` the 3x7 matrix `N` has row `i = 1..3`
//!
//! ```text
//! (1, d_i, x_i, x_i*d_i, x_i^2, d_i^2, x_i^2*d_i^2)
//! ```
//!
//! so that `N^T * (p1, p2, p3)` reproduces `tp2..tp8`; a tuple zeroing the
//! symmetric family without zeroing `p1..p3` therefore forces `rank(N) <= 2`.
//! The two 3x2 submatrices `N1` (columns `1, d`) and `N2` (columns `1, x`)
//! split the degenerate ranks into cases: `N1` loses rank exactly when the
//! face diagonals are all equal, `N2` exactly when the edges are.
//!
//! Ranks are computed by fraction-free (division-deferred) elimination:
//! rational rows are scaled to integers first, and the Bareiss step keeps all
//! intermediates integral, so there is no rational blow-up and no rounding
//! anywhere.

use num_traits::{Signed as _, Zero as _};
use serde::{Serialize, Serializer};

use crate::perm::Permutation3;
use crate::residuals::eval_p;
use crate::tuple::Tuple;
use crate::{arith, Error, Int, Rat, Result, Scalar};

/// Dense row-major matrix over an exact scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<S> {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    /// Rows and columns both reversed. Rank is invariant under this, which
    /// makes it a cheap independent pivoting order for cross-checks.
    pub fn reversed(&self) -> Matrix<S> {
        let mut data = self.data.clone();
        data.reverse();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c).clone() * v[c].clone())
                    .fold(S::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Rank by one-step fraction-free elimination. Every division performed
    /// is exact over the scalar's ring, so integral domains are fine.
    pub fn rank_elimination(&self) -> usize {
        let mut a: Vec<Vec<S>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        let mut prev = S::one();
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..self.rows {
                for j in c + 1..self.cols {
                    a[r][j] = (a[rank][c].clone() * a[r][j].clone()
                        - a[r][c].clone() * a[rank][j].clone())
                        / prev.clone();
                }
                a[r][c] = S::zero();
            }
            prev = a[rank][c].clone();
            rank += 1;
        }
        rank
    }
}

impl Matrix<Rat> {
    /// Exact rank. Each row is scaled by its least common denominator (row
    /// scaling preserves rank) so the elimination runs over integers.
    pub fn rank(&self) -> usize {
        use num_integer::Integer as _;
        use num_traits::One as _;
        let rows: Vec<Vec<Int>> = (0..self.rows)
            .map(|r| {
                let lcd = (0..self.cols)
                    .fold(Int::one(), |acc, c| acc.lcm(self.get(r, c).denom()));
                (0..self.cols)
                    .map(|c| {
                        let v = self.get(r, c);
                        v.numer() * (&lcd / v.denom())
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows).rank_elimination()
    }
}

impl Matrix<Int> {
    pub fn rank(&self) -> usize {
        self.rank_elimination()
    }
}

/// The 3x7 coefficient matrix of a tuple.
pub fn build_n<S: Scalar>(t: &Tuple<S>) -> Matrix<S> {
    let rows = [1, 2, 3]
        .map(|i| {
            let (x, d) = (t.x(i).clone(), t.d(i).clone());
            let (xx, dd) = (x.clone() * x.clone(), d.clone() * d.clone());
            vec![
                S::one(),
                d.clone(),
                x.clone(),
                x * d,
                xx.clone(),
                dd.clone(),
                xx * dd,
            ]
        })
        .to_vec();
    Matrix::from_rows(rows)
}

/// Columns `(1, d_i)` of `N`.
pub fn build_n1<S: Scalar>(t: &Tuple<S>) -> Matrix<S> {
    build_n(t).select_columns(&[0, 1])
}

/// Columns `(1, x_i)` of `N`.
pub fn build_n2<S: Scalar>(t: &Tuple<S>) -> Matrix<S> {
    build_n(t).select_columns(&[0, 2])
}

/// `N^T * (p1, p2, p3)`: the length-7 vector `(tp2, ..., tp8)` computed
/// through the matrix, independently of the scalar fast path.
pub fn apply_matrix_equation<S: Scalar>(t: &Tuple<S>) -> [S; 7] {
    let p = [1, 2, 3].map(|i| eval_p(i, t).expect("p1..p3 never need L"));
    build_n(t)
        .transpose()
        .mul_vec(&p)
        .try_into()
        .expect("7 rows")
}

/// Case labels induced by `(rank N, rank N1, rank N2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CaseLabel {
    /// `rank N = 1`: edges all equal, diagonals all equal.
    Rank1,
    /// `rank N = 2`, diagonals spread, edges all equal.
    N1Rank2N2Rank1,
    /// `rank N = 2`, diagonals all equal, edges spread.
    N1Rank1N2Rank2,
    /// `rank N = 2`, both spread.
    N1Rank2N2Rank2,
    /// `rank N = 3`: no degeneracy.
    FullRank,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 5] = [
        CaseLabel::Rank1,
        CaseLabel::N1Rank2N2Rank1,
        CaseLabel::N1Rank1N2Rank2,
        CaseLabel::N1Rank2N2Rank2,
        CaseLabel::FullRank,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::Rank1 => "Rank1",
            CaseLabel::N1Rank2N2Rank1 => "Case_N1_2_N2_1",
            CaseLabel::N1Rank1N2Rank2 => "Case_N1_1_N2_2",
            CaseLabel::N1Rank2N2Rank2 => "Case_N1_2_N2_2",
            CaseLabel::FullRank => "FullRank",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Ranks of `N` and its two submatrices, plus the induced label.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RankProfile {
    pub rank_n: usize,
    pub rank_n1: usize,
    pub rank_n2: usize,
    pub case_label: CaseLabel,
}

fn ser_opt_rat<Ser: Serializer>(v: &Option<Rat>, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    match v {
        Some(r) => s.serialize_str(&arith::format_rat(r)),
        None => s.serialize_none(),
    }
}

/// Low-rank structure constants. Only the fields meaningful for the label
/// are populated; an underdetermined quadratic leaves its fields absent
/// rather than inventing roots.
///
/// Semantics when present: `alpha` is the common edge value, `delta` the
/// common diagonal value; `(beta, gamma)` solve `d_i^2 = beta*d_i + gamma`
/// with root values `s1` (the repeated one) and `s2`; `(epsilon, zeta)`
/// solve `x_i^2 = epsilon*x_i + zeta` with roots `r1` (repeated) and `r2`;
/// `theta` is the common magnitude in the boundary family `x = +-(0,0,t)`,
/// `d = +-(t,t,0)` up to `subcase_perm`. `subcase_perm` is the relabeling
/// that moves the repeated values to positions 1 and 2.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CaseWitness {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub alpha: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub beta: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub gamma: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub delta: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub epsilon: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub zeta: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub s1: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub s2: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub r1: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub r2: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rat")]
    pub theta: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcase_perm: Option<Permutation3>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    #[serde(flatten)]
    pub profile: RankProfile,
    pub witness: CaseWitness,
}

/// How a value triple repeats.
enum TripleShape {
    AllEqual,
    /// 1-based positions: the two holding the repeated value, then the lone
    /// one.
    TwoDistinct { rep: (usize, usize), lone: usize },
    AllDistinct,
}

fn triple_shape(v: &[Rat; 3]) -> TripleShape {
    match (v[0] == v[1], v[0] == v[2], v[1] == v[2]) {
        (true, true, _) => TripleShape::AllEqual,
        (true, false, _) => TripleShape::TwoDistinct { rep: (1, 2), lone: 3 },
        (false, true, _) => TripleShape::TwoDistinct { rep: (1, 3), lone: 2 },
        (false, false, true) => TripleShape::TwoDistinct { rep: (2, 3), lone: 1 },
        (false, false, false) => TripleShape::AllDistinct,
    }
}

/// `(beta, gamma)` with `u^2 = beta*u + gamma` and `v^2 = beta*v + gamma`
/// for distinct `u, v`: by difference `beta = u + v`, then `gamma = -u*v`.
fn quadratic_through(u: &Rat, v: &Rat) -> (Rat, Rat) {
    (u + v, -(u * v))
}

fn normalizing_perm(rep: (usize, usize), lone: usize) -> Permutation3 {
    Permutation3::from_images([rep.0.min(rep.1), rep.0.max(rep.1), lone]).expect("positions")
}

/// Computes the rank profile and case witness of a tuple. The space
/// diagonal is irrelevant here; `N` only reads edges and face diagonals.
///
/// Errors surface impossible rank/value combinations (for example three
/// distinct diagonal values while `rank N <= 2`); exact arithmetic cannot
/// reach them unless the elimination itself is wrong, so they are
/// consistency checks, not expected outcomes.
pub fn classify(t: &Tuple<Rat>) -> Result<Classification> {
    let rank_n = build_n(t).rank();
    let rank_n1 = build_n1(t).rank();
    let rank_n2 = build_n2(t).rank();
    let profile = |case_label| RankProfile { rank_n, rank_n1, rank_n2, case_label };
    let inconsistent = |msg: String| Error::Inconsistent(format!("{msg} at {t}"));

    if rank_n == 3 {
        return Ok(Classification {
            profile: profile(CaseLabel::FullRank),
            witness: CaseWitness::default(),
        });
    }

    let d_shape = triple_shape(&t.d);
    let x_shape = triple_shape(&t.x);

    match (rank_n, rank_n1, rank_n2) {
        (1, 1, 1) => {
            if !matches!(x_shape, TripleShape::AllEqual) || !matches!(d_shape, TripleShape::AllEqual) {
                return Err(inconsistent("rank 1 with unequal coordinates".into()));
            }
            Ok(Classification {
                profile: profile(CaseLabel::Rank1),
                witness: CaseWitness {
                    alpha: Some(t.x(1).clone()),
                    beta: Some(t.d(1).clone()),
                    ..CaseWitness::default()
                },
            })
        }
        (2, 2, 1) => {
            if !matches!(x_shape, TripleShape::AllEqual) {
                return Err(inconsistent("rank N2 = 1 with unequal edges".into()));
            }
            let TripleShape::TwoDistinct { rep, lone } = d_shape else {
                return Err(inconsistent(
                    "rank N <= 2 and rank N1 = 2 need exactly two distinct diagonal values".into(),
                ));
            };
            let (s1, s2) = (t.d(rep.0).clone(), t.d(lone).clone());
            let (beta, gamma) = quadratic_through(&s1, &s2);
            Ok(Classification {
                profile: profile(CaseLabel::N1Rank2N2Rank1),
                witness: CaseWitness {
                    alpha: Some(t.x(1).clone()),
                    beta: Some(beta),
                    gamma: Some(gamma),
                    s1: Some(s1),
                    s2: Some(s2),
                    subcase_perm: Some(normalizing_perm(rep, lone)),
                    ..CaseWitness::default()
                },
            })
        }
        (2, 1, 2) => {
            if !matches!(d_shape, TripleShape::AllEqual) {
                return Err(inconsistent("rank N1 = 1 with unequal diagonals".into()));
            }
            let TripleShape::TwoDistinct { rep, lone } = x_shape else {
                return Err(inconsistent(
                    "rank N <= 2 and rank N2 = 2 need exactly two distinct edge values".into(),
                ));
            };
            let (r1, r2) = (t.x(rep.0).clone(), t.x(lone).clone());
            let (epsilon, zeta) = quadratic_through(&r1, &r2);
            Ok(Classification {
                profile: profile(CaseLabel::N1Rank1N2Rank2),
                witness: CaseWitness {
                    delta: Some(t.d(1).clone()),
                    epsilon: Some(epsilon),
                    zeta: Some(zeta),
                    r1: Some(r1),
                    r2: Some(r2),
                    subcase_perm: Some(normalizing_perm(rep, lone)),
                    ..CaseWitness::default()
                },
            })
        }
        (2, 2, 2) => {
            let (TripleShape::TwoDistinct { rep: drep, lone: dlone },
                 TripleShape::TwoDistinct { rep: xrep, lone: xlone }) = (d_shape, x_shape)
            else {
                return Err(inconsistent(
                    "rank 2 with both submatrices rank 2 needs two distinct values on each triple".into(),
                ));
            };
            if drep != xrep {
                // Mismatched repetition positions make the (1, d, x) minor a
                // nonzero product of differences, i.e. rank 3; landing here
                // contradicts rank_n = 2.
                return Err(inconsistent(
                    "edge and diagonal repetition positions disagree under rank 2".into(),
                ));
            }
            let (s1, s2) = (t.d(drep.0).clone(), t.d(dlone).clone());
            let (beta, gamma) = quadratic_through(&s1, &s2);
            let (r1, r2) = (t.x(xrep.0).clone(), t.x(xlone).clone());
            let (epsilon, zeta) = quadratic_through(&r1, &r2);
            let theta = (r1.is_zero() && s2.is_zero() && r2.abs() == s1.abs())
                .then(|| r2.abs());
            Ok(Classification {
                profile: profile(CaseLabel::N1Rank2N2Rank2),
                witness: CaseWitness {
                    beta: Some(beta),
                    gamma: Some(gamma),
                    epsilon: Some(epsilon),
                    zeta: Some(zeta),
                    s1: Some(s1),
                    s2: Some(s2),
                    r1: Some(r1),
                    r2: Some(r2),
                    theta,
                    subcase_perm: Some(normalizing_perm(drep, dlone)),
                    ..CaseWitness::default()
                },
            })
        }
        other => Err(inconsistent(format!("rank profile {other:?} is not reachable"))),
    }
}
