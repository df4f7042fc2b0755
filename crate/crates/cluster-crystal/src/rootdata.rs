//! Cartan matrices, reduced words, the doubled Coxeter word, the
//! `e(i)`/`k⁻` combinatorics, and almost-positive-root counting.
//!
//! Convention: the Cartan matrix entry `a_{i,j}` satisfies
//! `α_j(h_i) = a_{i,j}`, so the `j`-th simple root written in the
//! fundamental-weight basis is the `j`-th *column* of the matrix.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::laurent::TorusWeight;

/// The four classical Cartan–Killing types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    /// Type `A_r` (`SL_{r+1}`).
    A,
    /// Type `B_r` (`SO_{2r+1}`).
    B,
    /// Type `C_r` (`Sp_{2r}`).
    C,
    /// Type `D_r` (`SO_{2r}`).
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
        })
    }
}

/// A classical type together with its rank and Cartan matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanData {
    /// The Cartan–Killing type.
    pub kind: Kind,
    /// The rank `r` (`≥ 2`; `≥ 3` for type D).
    pub rank: usize,
    matrix: Vec<Vec<i64>>,
}

impl CartanData {
    /// Builds the Cartan data for the given type and rank.
    ///
    /// # Panics
    /// If the rank is below the minimum for the type (2, or 3 for D).
    pub fn new(kind: Kind, rank: usize) -> Self {
        assert!(rank >= 2, "rank must be at least 2");
        if kind == Kind::D {
            assert!(rank >= 3, "type D needs rank at least 3");
        }
        let r = rank;
        let mut m = vec![vec![0i64; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Simply laced chain 1—2—…—(r or r−1).
        let chain_end = if kind == Kind::D { r - 1 } else { r };
        for i in 1..chain_end {
            m[i - 1][i] = -1;
            m[i][i - 1] = -1;
        }
        match kind {
            Kind::A => {}
            Kind::B => {
                // a_{r,r−1} = −2 (α_{r−1}(h_r) = −2).
                m[r - 1][r - 2] = -2;
            }
            Kind::C => {
                // a_{r−1,r} = −2 (α_r(h_{r−1}) = −2).
                m[r - 2][r - 1] = -2;
            }
            Kind::D => {
                // Node r attached to node r−2.
                m[r - 3][r - 1] = -1;
                m[r - 1][r - 3] = -1;
            }
        }
        CartanData { kind, rank, matrix: m }
    }

    /// The entry `a_{i,j}` (1-based).
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    /// The simple root `α_j` written in the fundamental-weight basis:
    /// `α_j = Σ_i a_{i,j} Λ_i`.
    pub fn simple_root(&self, j: usize) -> TorusWeight {
        TorusWeight { coeffs: (1..=self.rank).map(|i| self.a(i, j)).collect() }
    }

    /// A positive-integer symmetrizer `d` with `d_i a_{i,j} = d_j a_{j,i}`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let r = self.rank;
        let mut d = vec![0i64; r];
        d[0] = 1;
        // Propagate along edges until stable; scale to integers at the end.
        // Entries stay small, so work over rationals with denominator 2.
        let mut num = vec![0i64; r];
        num[0] = 2; // d_i stored as num_i / 2
        let mut changed = true;
        while changed {
            changed = false;
            for i in 1..=r {
                for j in 1..=r {
                    if i == j || self.a(i, j) == 0 {
                        continue;
                    }
                    if num[i - 1] != 0 && num[j - 1] == 0 {
                        // d_j = d_i a_{i,j} / a_{j,i}
                        num[j - 1] = num[i - 1] * self.a(i, j) / self.a(j, i);
                        changed = true;
                    }
                }
            }
        }
        let all_even = num.iter().all(|&n| n % 2 == 0);
        for i in 0..r {
            d[i] = if all_even { num[i] / 2 } else { num[i] };
        }
        debug_assert!(d.iter().all(|&x| x > 0));
        for i in 1..=r {
            for j in 1..=r {
                debug_assert_eq!(d[i - 1] * self.a(i, j), d[j - 1] * self.a(j, i));
            }
        }
        d
    }

    /// Counts the almost positive roots `|Φ_{>0}| + r`, with the positive
    /// roots enumerated by brute-force closure of the simple roots under the
    /// Weyl-group reflections (never hard-coded).
    pub fn almost_positive_count(&self) -> usize {
        let r = self.rank;
        // Roots as coordinate vectors in the simple-root basis.
        let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for j in 0..r {
            let mut v = vec![0i64; r];
            v[j] = 1;
            orbit.insert(v.clone());
            frontier.push(v);
        }
        while let Some(beta) = frontier.pop() {
            for i in 1..=r {
                // s_i(β) = β − ⟨h_i, β⟩ α_i with ⟨h_i, β⟩ = Σ_j β_j a_{i,j}.
                let pairing: i64 = (1..=r).map(|j| beta[j - 1] * self.a(i, j)).sum();
                let mut refl = beta.clone();
                refl[i - 1] -= pairing;
                if orbit.insert(refl.clone()) {
                    frontier.push(refl);
                }
            }
        }
        let positive = orbit.iter().filter(|v| v.iter().all(|&c| c >= 0)).count();
        positive + r
    }
}

/// A reduced word `(j_n, …, j_1)` stored left-to-right as displayed, with
/// `j_k` the `k`-th letter **from the right**.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord {
    /// Letters as displayed: `letters[0] = j_n`, …, `letters[n-1] = j_1`.
    pub letters: Vec<u32>,
}

impl ReducedWord {
    /// Word length `n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letter `j_k`, i.e. the `k`-th from the right (`1 ≤ k ≤ n`).
    pub fn j(&self, k: usize) -> u32 {
        self.letters[self.len() - k]
    }
}

/// A Weyl-group element as a word of simple-reflection indices, leftmost
/// applied first in the product `s_{w_1} s_{w_2} ⋯`.
pub type WeylWord = Vec<u32>;

/// The doubled Coxeter word `(r, r−1, …, 1, r, r−1, …, 1)`.
pub fn coxeter_square_word(cd: &CartanData) -> ReducedWord {
    let r = cd.rank as u32;
    let mut letters = Vec::with_capacity(2 * cd.rank);
    for _ in 0..2 {
        for i in (1..=r).rev() {
            letters.push(i);
        }
    }
    ReducedWord { letters }
}

/// The suffix `v_{>k} = s_{j_1} s_{j_2} ⋯ s_{j_{n−k}}` as a [`WeylWord`].
///
/// # Panics
/// If `k > n`.
pub fn word_suffix(w: &ReducedWord, k: usize) -> WeylWord {
    let n = w.len();
    assert!(k <= n, "suffix index out of range");
    (1..=n - k).map(|t| w.j(t)).collect()
}

/// The result of the `e(i)` / `k⁻` combinatorics for a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordCombinatorics {
    /// `e(i) = {k ∈ [1,n] : k⁻ is defined}`.
    pub e_set: BTreeSet<i64>,
    /// `k ↦ k⁻` over `[−1,−r] ∪ [1,n]` (entries absent where undefined).
    pub kminus: BTreeMap<i64, i64>,
}

/// Computes `e(i)` and the map `k ↦ k⁻`.
///
/// For `l ∈ [1,n]`, `l⁻` is the largest `k < l` with `j_l = j_k`; for
/// `l ∈ [−1,−r]` (the prefixed entries `j_{−t} = −t`), `l⁻` is the largest
/// `k ∈ [1,n]` with `|j_l| = |j_k|`.
pub fn e_and_kminus(cd: &CartanData, w: &ReducedWord) -> WordCombinatorics {
    let n = w.len() as i64;
    let mut e_set = BTreeSet::new();
    let mut kminus = BTreeMap::new();
    for l in 1..=n {
        let jl = w.j(l as usize);
        for k in (1..l).rev() {
            if w.j(k as usize) == jl {
                kminus.insert(l, k);
                e_set.insert(l);
                break;
            }
        }
    }
    for t in 1..=cd.rank as i64 {
        for k in (1..=n).rev() {
            if w.j(k as usize) as i64 == t {
                kminus.insert(-t, k);
                break;
            }
        }
    }
    WordCombinatorics { e_set, kminus }
}

/// The color `|j_k|` of a vertex index `k ∈ [−1,−r] ∪ [1,n]`.
pub fn vertex_color(w: &ReducedWord, k: i64) -> u32 {
    if k < 0 {
        (-k) as u32
    } else {
        w.j(k as usize)
    }
}
