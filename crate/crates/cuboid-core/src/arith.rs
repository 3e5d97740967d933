//! Exact integer and rational helpers: floor square roots, perfect-square
//! tests, and the `num` / `num/den` literal format used everywhere tuples are
//! read or printed.
//!
//! Square testing is the hot operation of the brick search, so both the
//! `u64` and big-integer paths share a cheap modular prefilter: a value that
//! is a square must be a square residue mod 64, 63, 65, and 11. The filter
//! only ever rejects; every accept is confirmed with a real square root, so
//! the predicate is identical with the filter disabled.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Int, Rat, Result};

/// Bitmask of square residues modulo `m` (bit `r` set iff `r` is one).
const fn square_mask(m: u32) -> u128 {
    let mut mask = 0u128;
    let mut r = 0u64;
    while r < m as u64 {
        mask |= 1 << ((r * r) % m as u64);
        r += 1;
    }
    mask
}

const MASK_64: u128 = square_mask(64);
const MASK_63: u128 = square_mask(63);
const MASK_65: u128 = square_mask(65);
const MASK_11: u128 = square_mask(11);

/// Product of the four filter moduli; one big-integer division fetches all
/// four residues at once.
const FILTER_MODULUS: u64 = 64 * 63 * 65 * 11;

fn residue_may_be_square(r: u64) -> bool {
    MASK_64 & (1 << (r % 64)) != 0
        && MASK_63 & (1 << (r % 63)) != 0
        && MASK_65 & (1 << (r % 65)) != 0
        && MASK_11 & (1 << (r % 11)) != 0
}

/// Floor of the square root of a non-negative integer.
///
/// Newton/Heron iteration seeded from the bit length: the initial guess
/// `2^ceil(bits/2)` is always at least the root, and from above the
/// iteration decreases monotonically, so the first non-decreasing step stops
/// at the floor. Negative input is a domain error.
pub fn integer_sqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::NegativeSqrt(n.clone()));
    }
    if n.bits() < 2 {
        return Ok(n.clone());
    }
    let mut x: Int = Int::one() << ((n.bits() + 1) / 2);
    loop {
        let y: Int = (&x + n / &x) >> 1;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

/// Floor square root on `u64`.
pub fn integer_sqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// Exact perfect-square test; negative values are never squares.
pub fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = (n % Int::from(FILTER_MODULUS)).to_u64().expect("residue fits u64");
    if !residue_may_be_square(r) {
        return false;
    }
    is_perfect_square_unfiltered(n)
}

/// The confirm path of [`is_perfect_square`], root-and-square only. Kept
/// separate so the filter can be checked against it.
pub(crate) fn is_perfect_square_unfiltered(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = integer_sqrt(n).expect("non-negative");
    &r * &r == *n
}

/// Exact perfect-square test on `u64`.
pub fn is_perfect_square_u64(n: u64) -> bool {
    if !residue_may_be_square(n % FILTER_MODULUS) {
        return false;
    }
    let r = n.isqrt();
    r * r == n
}

#[cfg(test)]
pub(crate) fn is_perfect_square_u64_unfiltered(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// Parses `num` or `num/den` into a reduced rational. The denominator must
/// be nonzero; signs may appear on either part and are normalized so the
/// stored denominator is positive.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num_s, den_s) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let num: Int = num_s.trim().parse().map_err(|_| bad())?;
    let den: Int = match den_s {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => Int::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Formats a rational as `num` when the denominator is one, `num/den`
/// otherwise. Inverse of [`parse_rat`] on reduced values.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
