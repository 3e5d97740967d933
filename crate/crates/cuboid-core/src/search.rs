//! Exhaustive search for integer bricks whose three face diagonals are all
//! integers, and the companion check that none of them has an integer space
//! diagonal.
//!
//! This is the one corner of the crate that runs on fixed-width integers:
//! edges are capped at 10^6, so every intermediate (`x^2 + y^2 + z^2`) stays
//! below `3 * 10^12`, comfortably inside `u64`. [`search_bricks_big`] is the
//! same algorithm over arbitrary-precision integers for anything larger and
//! doubles as an independent implementation to test the fast path against.
//!
//! Enumeration order is canonical (`x1 <= x2 <= x3`, ascending by
//! `(x3, x2, x1)`), and the pair `(x2, x3)` is screened first: only when
//! `x2^2 + x3^2` is already a perfect square does the inner edge loop run.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive as _;
use serde::Serialize;

use crate::arith::{
    integer_sqrt, integer_sqrt_u64, is_perfect_square, is_perfect_square_u64,
};
use crate::parallel;
use crate::{Error, Int, Result};

/// Largest `max_edge` the `u64` search accepts; above this, squares of sums
/// would need more care than fixed-width arithmetic deserves.
pub const MAX_EDGE_LIMIT: u64 = 1_000_000;

/// An integer brick with integer face diagonals, edges sorted ascending.
/// `d1` spans the face `(x2, x3)`, `d2` the face `(x1, x3)`, `d3` the face
/// `(x1, x2)`; the sort makes `d1 >= d2 >= d3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Brick {
    pub x1: u64,
    pub x2: u64,
    pub x3: u64,
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
    /// No common factor across the three edges.
    pub primitive: bool,
}

impl Brick {
    pub fn space_diagonal_squared(&self) -> u64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    /// Integer space diagonal, when one exists. Always `None` for every
    /// brick anyone has ever found; a `Some` here is a major discovery.
    pub fn space_diagonal(&self) -> Option<u64> {
        let s = self.space_diagonal_squared();
        is_perfect_square_u64(s).then(|| integer_sqrt_u64(s))
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.x1, self.x2, self.x3, self.d1, self.d2, self.d3, self.primitive
        )
    }
}

/// Search outcome. `bricks` is ascending by `(x3, x2, x1)`; the order, like
/// every other field except `wall_time`, is independent of the worker count.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub max_edge: u64,
    pub primitive_only: bool,
    pub scanned_pairs: u64,
    pub bricks: Vec<Brick>,
    /// Bricks whose space diagonal is also an integer. Expected empty.
    pub perfect_found: Vec<Brick>,
    /// Measured, not reproducible; excluded from serialized reports.
    #[serde(skip)]
    pub wall_time: Duration,
}

fn push_if_kept(report_bricks: &mut Vec<Brick>, perfect: &mut Vec<Brick>, b: Brick, primitive_only: bool) {
    if b.space_diagonal().is_some() {
        perfect.push(b);
    }
    if !primitive_only || b.primitive {
        report_bricks.push(b);
    }
}

/// Enumerates all bricks with integer face diagonals and edges up to
/// `max_edge`, canonically oriented. Fails fast when `max_edge` exceeds
/// [`MAX_EDGE_LIMIT`]; use [`search_bricks_big`] beyond that.
pub fn search_bricks(max_edge: u64, primitive_only: bool) -> Result<SearchReport> {
    if max_edge > MAX_EDGE_LIMIT {
        return Err(Error::EdgeBound(max_edge));
    }
    let start = Instant::now();
    let acc = parallel::fold_chunks(
        max_edge,
        parallel::CHUNK,
        |range| {
            let mut bricks = Vec::new();
            let mut perfect = Vec::new();
            let mut pairs = 0u64;
            for x3 in range.start + 1..=range.end {
                for x2 in 1..=x3 {
                    pairs += 1;
                    let s1 = x2 * x2 + x3 * x3;
                    if !is_perfect_square_u64(s1) {
                        continue;
                    }
                    let d1 = integer_sqrt_u64(s1);
                    for x1 in 1..=x2 {
                        let s2 = x1 * x1 + x3 * x3;
                        if !is_perfect_square_u64(s2) {
                            continue;
                        }
                        let s3 = x1 * x1 + x2 * x2;
                        if !is_perfect_square_u64(s3) {
                            continue;
                        }
                        let b = Brick {
                            x1,
                            x2,
                            x3,
                            d1,
                            d2: integer_sqrt_u64(s2),
                            d3: integer_sqrt_u64(s3),
                            primitive: num_integer::gcd(x1, num_integer::gcd(x2, x3)) == 1,
                        };
                        push_if_kept(&mut bricks, &mut perfect, b, primitive_only);
                    }
                }
            }
            (bricks, perfect, pairs)
        },
        |(mut b, mut p, n), (b2, p2, n2)| {
            b.extend(b2);
            p.extend(p2);
            (b, p, n + n2)
        },
    );
    let (bricks, perfect_found, scanned_pairs) = acc.unwrap_or_default();
    Ok(SearchReport {
        max_edge,
        primitive_only,
        scanned_pairs,
        bricks,
        perfect_found,
        wall_time: start.elapsed(),
    })
}

/// The same enumeration over arbitrary-precision integers. No edge bound,
/// proportionally slower; shares no arithmetic with the `u64` path beyond
/// the residue prefilter, which makes it a useful cross-check.
pub fn search_bricks_big(max_edge: u64, primitive_only: bool) -> SearchReport {
    let start = Instant::now();
    let to_u64 = |v: &Int| v.to_u64().expect("bounded by max_edge arithmetic");
    let acc = parallel::fold_chunks(
        max_edge,
        parallel::CHUNK,
        |range| {
            let mut bricks = Vec::new();
            let mut perfect = Vec::new();
            let mut pairs = 0u64;
            for x3 in range.start + 1..=range.end {
                let b3 = Int::from(x3);
                for x2 in 1..=x3 {
                    pairs += 1;
                    let b2 = Int::from(x2);
                    let s1 = &b2 * &b2 + &b3 * &b3;
                    if !is_perfect_square(&s1) {
                        continue;
                    }
                    let d1 = integer_sqrt(&s1).expect("nonnegative");
                    for x1 in 1..=x2 {
                        let b1 = Int::from(x1);
                        let s2 = &b1 * &b1 + &b3 * &b3;
                        if !is_perfect_square(&s2) {
                            continue;
                        }
                        let s3 = &b1 * &b1 + &b2 * &b2;
                        if !is_perfect_square(&s3) {
                            continue;
                        }
                        let b = Brick {
                            x1,
                            x2,
                            x3,
                            d1: to_u64(&d1),
                            d2: to_u64(&integer_sqrt(&s2).expect("nonnegative")),
                            d3: to_u64(&integer_sqrt(&s3).expect("nonnegative")),
                            primitive: num_integer::gcd(x1, num_integer::gcd(x2, x3)) == 1,
                        };
                        push_if_kept(&mut bricks, &mut perfect, b, primitive_only);
                    }
                }
            }
            (bricks, perfect, pairs)
        },
        |(mut b, mut p, n), (b2, p2, n2)| {
            b.extend(b2);
            p.extend(p2);
            (b, p, n + n2)
        },
    );
    let (bricks, perfect_found, scanned_pairs) = acc.unwrap_or_default();
    SearchReport {
        max_edge,
        primitive_only,
        scanned_pairs,
        bricks,
        perfect_found,
        wall_time: start.elapsed(),
    }
}

/// Result of asking whether any brick up to `max_edge` has an integer space
/// diagonal.
#[derive(Clone, Debug, Serialize)]
pub struct AbsenceCheck {
    pub max_edge: u64,
    /// True when no witness exists in range: the expected outcome.
    pub absent: bool,
    pub witnesses: Vec<Brick>,
}

/// Scans all bricks up to `max_edge` and reports any with an integer space
/// diagonal. Finding one would contradict every search ever run; the
/// structure still reports it honestly instead of asserting.
pub fn check_perfect_absence(max_edge: u64) -> Result<AbsenceCheck> {
    let report = search_bricks(max_edge, false)?;
    Ok(AbsenceCheck {
        max_edge,
        absent: report.perfect_found.is_empty(),
        witnesses: report.perfect_found,
    })
}

/// CSV with a fixed header, one brick per row, `\n` separators.
pub fn bricks_csv(bricks: &[Brick]) -> String {
    let mut out = String::from("x1,x2,x3,d1,d2,d3,primitive\n");
    for b in bricks {
        out.push_str(&b.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Filter-free brute force used as the oracle: three nested loops, each
    /// square testified by multiplying the root back.
    fn naive_bricks(max_edge: u64) -> Vec<Brick> {
        let sq = |n: u64| {
            let r = integer_sqrt_u64(n);
            (r * r == n).then_some(r)
        };
        let mut out = Vec::new();
        for x3 in 1..=max_edge {
            for x2 in 1..=x3 {
                for x1 in 1..=x2 {
                    let (Some(d1), Some(d2), Some(d3)) = (
                        sq(x2 * x2 + x3 * x3),
                        sq(x1 * x1 + x3 * x3),
                        sq(x1 * x1 + x2 * x2),
                    ) else {
                        continue;
                    };
                    out.push(Brick {
                        x1,
                        x2,
                        x3,
                        d1,
                        d2,
                        d3,
                        primitive: num_integer::gcd(x1, num_integer::gcd(x2, x3)) == 1,
                    });
                }
            }
        }
        out
    }

    #[test]
    fn smallest_brick_and_its_diagonals() {
        let r = search_bricks(250, false).unwrap();
        assert_eq!(r.scanned_pairs, 250 * 251 / 2);
        assert_eq!(
            r.bricks,
            vec![Brick { x1: 44, x2: 117, x3: 240, d1: 267, d2: 244, d3: 125, primitive: true }]
        );
        assert!(r.perfect_found.is_empty());
    }

    #[test]
    fn bricks_up_to_300() {
        let r = search_bricks(300, false).unwrap();
        let got: Vec<(u64, u64, u64)> = r.bricks.iter().map(|b| (b.x1, b.x2, b.x3)).collect();
        assert_eq!(got, vec![(44, 117, 240), (240, 252, 275)]);
        assert!(r.bricks.iter().all(|b| b.primitive));
    }

    #[test]
    fn matches_naive_oracle() {
        for n in [50, 150, 300] {
            let r = search_bricks(n, false).unwrap();
            assert_eq!(r.bricks, naive_bricks(n), "max_edge={n}");
        }
    }

    #[test]
    fn scaled_copies_are_reported_and_filtered() {
        let all = search_bricks(480, false).unwrap();
        let doubled = Brick {
            x1: 88,
            x2: 234,
            x3: 480,
            d1: 534,
            d2: 488,
            d3: 250,
            primitive: false,
        };
        assert!(all.bricks.contains(&doubled));
        let prim = search_bricks(480, true).unwrap();
        assert!(!prim.bricks.contains(&doubled));
        assert!(prim.bricks.iter().all(|b| b.primitive));
        // Same scan either way, only reporting differs.
        assert_eq!(all.scanned_pairs, prim.scanned_pairs);
        let nonprim: Vec<&Brick> = all.bricks.iter().filter(|b| b.primitive).collect();
        assert_eq!(nonprim.len(), prim.bricks.len());
    }

    #[test]
    fn reported_bricks_satisfy_their_defining_squares() {
        let r = search_bricks(500, false).unwrap();
        assert!(!r.bricks.is_empty());
        for b in &r.bricks {
            assert!(b.x1 <= b.x2 && b.x2 <= b.x3);
            assert_eq!(b.d1 * b.d1, b.x2 * b.x2 + b.x3 * b.x3);
            assert_eq!(b.d2 * b.d2, b.x1 * b.x1 + b.x3 * b.x3);
            assert_eq!(b.d3 * b.d3, b.x1 * b.x1 + b.x2 * b.x2);
            assert!(b.d1 >= b.d2 && b.d2 >= b.d3);
            assert_eq!(
                b.primitive,
                num_integer::gcd(b.x1, num_integer::gcd(b.x2, b.x3)) == 1
            );
        }
    }

    #[test]
    fn big_integer_route_agrees_with_the_fast_path() {
        let fast = search_bricks(300, false).unwrap();
        let big = search_bricks_big(300, false);
        assert_eq!(fast.bricks, big.bricks);
        assert_eq!(fast.scanned_pairs, big.scanned_pairs);
        assert_eq!(fast.perfect_found, big.perfect_found);
    }

    #[test]
    fn edge_bound_is_enforced() {
        assert!(matches!(
            search_bricks(MAX_EDGE_LIMIT + 1, false),
            Err(Error::EdgeBound(_))
        ));
        // The big variant takes over above the limit; just check it starts.
        let r = search_bricks_big(10, false);
        assert_eq!(r.scanned_pairs, 55);
        assert!(r.bricks.is_empty());
    }

    #[test]
    fn no_integer_space_diagonal_below_500() {
        let check = check_perfect_absence(500).unwrap();
        assert!(check.absent);
        assert!(check.witnesses.is_empty());
        // Contrast: a brick-shaped triple that is NOT a face-diagonal brick
        // but has a square space diagonal, to show the check can see them.
        let fake = Brick { x1: 1, x2: 2, x3: 2, d1: 0, d2: 0, d3: 0, primitive: true };
        assert_eq!(fake.space_diagonal(), Some(3));
    }

    #[test]
    fn csv_shape_is_stable() {
        let r = search_bricks(300, false).unwrap();
        let csv = bricks_csv(&r.bricks);
        let want = "x1,x2,x3,d1,d2,d3,primitive\n\
                    44,117,240,267,244,125,true\n\
                    240,252,275,373,365,348,true\n";
        assert_eq!(csv, want);
    }

    #[test]
    fn report_json_omits_wall_time() {
        let r = search_bricks(50, false).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("wall_time").is_none());
        assert_eq!(v["max_edge"], 50);
        assert_eq!(v["bricks"], serde_json::json!([]));
    }
}
