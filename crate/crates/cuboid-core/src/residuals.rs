//! Exact evaluation of the cuboid residuals `p0..p3` and the symmetric
//! combinations `tp1..tp8` at a tuple.
//!
//! This is the scalar fast path: plain ring arithmetic over precomputed
//! squares. The same quantities exist as symbolic templates in [`crate::poly`]
//! and as a matrix product in [`crate::rank`]; the three routes are written
//! independently and checked against each other in tests.

use crate::tuple::Tuple;
use crate::{Error, Result, Scalar};

/// All residuals of one tuple, evaluated in a single pass.
///
/// `p0` and `tp1` are populated only when the evaluation was asked to cover
/// the space-diagonal system (`tp1` is the same polynomial as `p0`; both
/// names appear because one indexes the quadratic family and the other the
/// symmetric family).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Residuals<S> {
    pub p0: Option<S>,
    /// `p1, p2, p3`.
    pub p: [S; 3],
    pub tp1: Option<S>,
    /// `tp2, ..., tp8`.
    pub tp: [S; 7],
}

impl<S: Scalar> Residuals<S> {
    /// 1-based access to `tp1..tp8`; `tp1` only if evaluated.
    pub fn tp(&self, k: usize) -> Option<&S> {
        match k {
            1 => self.tp1.as_ref(),
            2..=8 => Some(&self.tp[k - 2]),
            _ => None,
        }
    }
}

fn sq<S: Scalar>(v: &S) -> S {
    v.clone() * v.clone()
}

/// `p_index` for `index` in `0..=3`. Index 0 requires the space diagonal.
pub fn eval_p<S: Scalar>(index: usize, t: &Tuple<S>) -> Result<S> {
    match index {
        0 => {
            let l = t.space_diagonal("p0")?;
            Ok(sq(t.x(1)) + sq(t.x(2)) + sq(t.x(3)) - sq(l))
        }
        1 => Ok(sq(t.x(2)) + sq(t.x(3)) - sq(t.d(1))),
        2 => Ok(sq(t.x(3)) + sq(t.x(1)) - sq(t.d(2))),
        3 => Ok(sq(t.x(1)) + sq(t.x(2)) - sq(t.d(3))),
        _ => Err(Error::IndexOutOfRange { family: "p0..p3", index }),
    }
}

/// `tp_index` for `index` in `1..=8`. Index 1 requires the space diagonal.
pub fn eval_factor<S: Scalar>(index: usize, t: &Tuple<S>) -> Result<S> {
    if index == 1 {
        return eval_p(0, t);
    }
    if !(2..=8).contains(&index) {
        return Err(Error::IndexOutOfRange { family: "tp1..tp8", index });
    }
    let p = [eval_p(1, t)?, eval_p(2, t)?, eval_p(3, t)?];
    Ok(combine(index, t, &p))
}

/// `sum_i c_i(t) * p_i` with the cofactor family selected by `index`.
fn combine<S: Scalar>(index: usize, t: &Tuple<S>, p: &[S; 3]) -> S {
    let term = |i: usize| -> S {
        let c = match index {
            2 => S::one(),
            3 => t.d(i).clone(),
            4 => t.x(i).clone(),
            5 => t.x(i).clone() * t.d(i).clone(),
            6 => sq(t.x(i)),
            7 => sq(t.d(i)),
            8 => sq(t.x(i)) * sq(t.d(i)),
            _ => unreachable!("index checked by caller"),
        };
        c * p[i - 1].clone()
    };
    term(1) + term(2) + term(3)
}

/// Evaluates every residual at once, sharing the squares. With
/// `include_space` set, `p0`/`tp1` are computed and the tuple must carry a
/// space diagonal.
pub fn residuals<S: Scalar>(t: &Tuple<S>, include_space: bool) -> Result<Residuals<S>> {
    let p0 = if include_space { Some(eval_p(0, t)?) } else { None };
    let p = [eval_p(1, t)?, eval_p(2, t)?, eval_p(3, t)?];
    let tp = [2, 3, 4, 5, 6, 7, 8].map(|k| combine(k, t, &p));
    Ok(Residuals {
        tp1: p0.clone(),
        p0,
        p,
        tp,
    })
}
