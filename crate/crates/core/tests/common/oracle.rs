//! Groebner-free reference computations: dense linear algebra over F_p on
//! homogeneous pieces of the polynomial ring.

use std::collections::HashMap;

use fplab::poly::Polynomial;

/// Exponent vectors of total degree `k` in `n` variables.
pub fn monomials(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            go(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    go(0, k, &mut cur, &mut out);
    out
}

fn inv(a: u64, p: u64) -> u64 {
    // Fermat
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of a matrix over F_p by row reduction.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let iv = inv(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = *x * iv % p;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] % p != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Terms of `f` as raw data, without relying on library arithmetic.
fn raw_terms(f: &Polynomial) -> Vec<(u64, Vec<u32>)> {
    f.terms()
        .iter()
        .map(|t| (t.coeff as u64, t.mono.exps().to_vec()))
        .collect()
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// The degree-`k` piece of a homogeneous ideal, spanned by `m * g`.
pub struct Piece {
    pub p: u64,
    pub index: HashMap<Vec<u32>, usize>,
    pub rows: Vec<Vec<u64>>,
}

impl Piece {
    pub fn new(n: usize, p: u64, k: u32, gens: &[Polynomial]) -> Piece {
        let basis = monomials(n, k);
        let index: HashMap<Vec<u32>, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut piece = Piece {
            p,
            index,
            rows: Vec::new(),
        };
        for g in gens {
            let terms = raw_terms(g);
            assert!(
                terms.iter().all(|(_, e)| total(e) == total(&terms[0].1)),
                "oracle needs homogeneous generators"
            );
            let dg = total(&terms[0].1);
            if dg > k {
                continue;
            }
            for m in monomials(n, k - dg) {
                let row = piece.row_of(&terms, &m);
                piece.rows.push(row);
            }
        }
        piece
    }

    fn row_of(&self, terms: &[(u64, Vec<u32>)], shift: &[u32]) -> Vec<u64> {
        let mut row = vec![0u64; self.index.len()];
        for (c, e) in terms {
            let prod: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            let i = self.index[&prod];
            row[i] = (row[i] + c) % self.p;
        }
        row
    }

    pub fn dim_space(&self) -> usize {
        self.index.len()
    }

    pub fn rank(&self) -> usize {
        rank(self.rows.clone(), self.p)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let terms = raw_terms(f);
        if terms.is_empty() {
            return true;
        }
        let mut rows = self.rows.clone();
        rows.push(self.row_of(&terms, &vec![0; terms[0].1.len()]));
        rank(rows, self.p) == self.rank()
    }
}

/// `dim_F (S/I)_k`.
pub fn hilbert_function(n: usize, p: u64, gens: &[Polynomial], k: u32) -> usize {
    let piece = Piece::new(n, p, k, gens);
    piece.dim_space() - piece.rank()
}

/// `dim_F S/I` for an m-primary homogeneous ideal, or `None` if the graded
/// pieces do not vanish by degree `limit`.
pub fn length(n: usize, p: u64, gens: &[Polynomial], limit: u32) -> Option<u64> {
    let mut total = 0u64;
    for k in 0..=limit {
        let h = hilbert_function(n, p, gens, k);
        if h == 0 {
            return Some(total);
        }
        total += h as u64;
    }
    None
}

/// `dim (A ∩ B)_k = dim A_k + dim B_k - dim (A + B)_k`.
pub fn intersection_dim(n: usize, p: u64, a: &[Polynomial], b: &[Polynomial], k: u32) -> usize {
    let both: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    Piece::new(n, p, k, a).rank() + Piece::new(n, p, k, b).rank()
        - Piece::new(n, p, k, &both).rank()
}

/// `dim (I : g)_k` for homogeneous `g`: the kernel of multiplication by `g`
/// from `S_k` to `S_{k+deg g} / I_{k+deg g}`.
pub fn colon_dim(n: usize, p: u64, gens: &[Polynomial], g: &Polynomial, k: u32) -> usize {
    let dg = g.degree().unwrap() as u32;
    let target = Piece::new(n, p, k + dg, gens);
    let base = target.rank();
    let mut with_g = Piece::new(n, p, k + dg, gens);
    let gterms = raw_terms(g);
    for m in monomials(n, k) {
        let row = with_g.row_of(&gterms, &m);
        with_g.rows.push(row);
    }
    monomials(n, k).len() - (with_g.rank() - base)
}
