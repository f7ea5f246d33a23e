//! Brute-force reference implementations for validation.
//!
//! Everything here is deliberately slow and simple: duals by filtering the
//! whole ambient space, spans by set closure, weights by walking bits one
//! at a time, triorthogonality by trying every basis. None of it shares an
//! elimination routine with the main modules, so agreement between the two
//! is evidence rather than tautology. Intended for tests and small inputs
//! only.

use crate::codes::LinearCode;
use crate::error::Error;
use crate::gf2::BitVector;
use std::collections::HashSet;

const MAX_SPAN_DIM: usize = 16;
const MAX_FILTER_LENGTH: usize = 14;
const MAX_DISTANCE_DIM: usize = 12;
const MAX_BASIS_SEARCH_DIM: usize = 4;

fn slow_weight(v: &BitVector) -> usize {
    v.iter_bits().filter(|&b| b).count()
}

fn slow_parity(v: &BitVector) -> bool {
    slow_weight(v) % 2 == 1
}

fn slow_dot(u: &BitVector, v: &BitVector) -> bool {
    slow_parity(&u.schur(v))
}

fn vector_from_index(length: usize, index: u64) -> BitVector {
    BitVector::from_bits((0..length).map(|i| index >> i & 1 == 1))
}

/// All `2^k` codewords by direct span enumeration, sorted canonically.
pub fn brute_codewords(code: &LinearCode) -> Result<Vec<BitVector>, Error> {
    let k = code.dimension();
    if k > MAX_SPAN_DIM {
        return Err(Error::ResourceLimit {
            operation: "brute_codewords",
            limit: MAX_SPAN_DIM as u64,
            requested: k as u128,
        });
    }
    let mut words = Vec::with_capacity(1 << k);
    for mask in 0u64..(1 << k) {
        let mut w = BitVector::zeros(code.length());
        for (i, row) in code.basis().rows().enumerate() {
            if mask >> i & 1 == 1 {
                w.xor_assign(row);
            }
        }
        words.push(w);
    }
    words.sort();
    Ok(words)
}

/// The dual as an explicit vector set, by filtering all `2^n` vectors of
/// the ambient space against every basis row.
pub fn brute_dual(code: &LinearCode) -> Result<Vec<BitVector>, Error> {
    let n = code.length();
    if n > MAX_FILTER_LENGTH {
        return Err(Error::ResourceLimit {
            operation: "brute_dual",
            limit: MAX_FILTER_LENGTH as u64,
            requested: n as u128,
        });
    }
    let mut out = Vec::new();
    for index in 0u64..(1 << n) {
        let v = vector_from_index(n, index);
        if code.basis().rows().all(|row| !slow_dot(&v, row)) {
            out.push(v);
        }
    }
    out.sort();
    Ok(out)
}

/// Exact minimum distance by scanning every nonzero codeword.
pub fn brute_min_distance(code: &LinearCode) -> Result<usize, Error> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    if code.dimension() > MAX_DISTANCE_DIM {
        return Err(Error::ResourceLimit {
            operation: "brute_min_distance",
            limit: MAX_DISTANCE_DIM as u64,
            requested: code.dimension() as u128,
        });
    }
    Ok(brute_codewords(code)?
        .iter()
        .filter(|w| !w.is_zero())
        .map(slow_weight)
        .min()
        .expect("nonzero code has a nonzero codeword"))
}

/// Closes `seed` under addition of the given generators, without any
/// elimination: each new generator outside the set doubles it.
fn span_closure(length: usize, generators: &[BitVector]) -> HashSet<BitVector> {
    let mut span = HashSet::new();
    span.insert(BitVector::zeros(length));
    for g in generators {
        if span.contains(g) {
            continue;
        }
        let doubled: Vec<BitVector> = span.iter().map(|s| s ^ g).collect();
        span.extend(doubled);
    }
    span
}

/// The Schur square as an explicit vector set, spanned from the products
/// of all codeword pairs rather than just basis pairs.
pub fn brute_schur_square(code: &LinearCode) -> Result<Vec<BitVector>, Error> {
    if code.length() > MAX_FILTER_LENGTH || code.dimension() > MAX_DISTANCE_DIM {
        return Err(Error::ResourceLimit {
            operation: "brute_schur_square",
            limit: MAX_FILTER_LENGTH as u64,
            requested: code.length().max(code.dimension()) as u128,
        });
    }
    let words = brute_codewords(code)?;
    let mut products = Vec::new();
    for a in &words {
        for b in &words {
            products.push(a.schur(b));
        }
    }
    let mut out: Vec<BitVector> = span_closure(code.length(), &products).into_iter().collect();
    out.sort();
    Ok(out)
}

/// True iff some basis of `code` forms a triorthogonal matrix, by testing
/// every basis. The predicate is invariant under row order, so unordered
/// bases are enumerated.
pub fn brute_triorthogonal(code: &LinearCode) -> Result<bool, Error> {
    let k = code.dimension();
    if k > MAX_BASIS_SEARCH_DIM {
        return Err(Error::ResourceLimit {
            operation: "brute_triorthogonal",
            limit: MAX_BASIS_SEARCH_DIM as u64,
            requested: k as u128,
        });
    }
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let nonzero: Vec<BitVector> = brute_codewords(code)?
        .into_iter()
        .filter(|w| !w.is_zero())
        .collect();
    let mut chosen: Vec<BitVector> = Vec::with_capacity(k);
    Ok(search_bases(code, &nonzero, 0, &mut chosen))
}

fn search_bases(
    code: &LinearCode,
    pool: &[BitVector],
    start: usize,
    chosen: &mut Vec<BitVector>,
) -> bool {
    if chosen.len() == code.dimension() {
        // k independent codewords automatically span the code
        return span_closure(code.length(), chosen).len() == 1 << code.dimension()
            && rows_triorthogonal(chosen);
    }
    for i in start..pool.len() {
        chosen.push(pool[i].clone());
        if search_bases(code, pool, i + 1, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

fn rows_triorthogonal(rows: &[BitVector]) -> bool {
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if slow_parity(&rows[i].schur(&rows[j])) {
                return false;
            }
            for l in (j + 1)..rows.len() {
                if slow_parity(&rows[i].schur(&rows[j]).schur(&rows[l])) {
                    return false;
                }
            }
        }
    }
    true
}
