//! Skew-symmetric exchange matrices, their mutation, and vertex relabeling.
//!
//! Vertices are 1-based throughout to match the usual labels of the
//! generalized q-P_VI quiver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::{Elem, GroupWord};

/// Exchange matrix of the generalized q-P_VI quiver family, size `4n + 4`
/// (or any skew-symmetric matrix when built with [`Quiver::from_matrix`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    n: usize,
    lambda: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct QuiverJson {
    n: usize,
    lambda: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Quiver, D::Error> {
        let raw = QuiverJson::deserialize(de)?;
        Quiver::from_matrix(raw.n, raw.lambda).map_err(serde::de::Error::custom)
    }
}

/// `4n + 4`, the number of vertices for family parameter `n`.
pub fn size_for(n: usize) -> usize {
    4 * n + 4
}

impl Quiver {
    /// Validated construction from a raw matrix.
    pub fn from_matrix(n: usize, lambda: Vec<Vec<i64>>) -> Result<Quiver> {
        let size = lambda.len();
        if lambda.iter().any(|row| row.len() != size) {
            return Err(Error::SizeMismatch("exchange matrix is not square".into()));
        }
        for i in 0..size {
            for j in 0..size {
                if lambda[i][j] != -lambda[j][i] {
                    return Err(Error::SizeMismatch(format!("not skew-symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Quiver { n, lambda })
    }

    /// The generalized q-P_VI quiver as a signed sum of `X_{i,j} = E_{i,j} − E_{j,i}`.
    pub fn gen_qpvi(n: usize) -> Quiver {
        assert!(n >= 1, "family parameter must be positive");
        let size = size_for(n);
        let mut q = Quiver { n, lambda: vec![vec![0; size]; size] };
        let m = 2 * n;
        for (j, s) in [(2 * m + 3, 1), (2 * m + 4, -1), (m + 3, -1), (m + 4, 1)] {
            q.add_x(1, j, s);
            q.add_x(2, j, -s);
        }
        for i in 1..=n {
            let a = 2 * i + 1;
            let b = 2 * i + 2;
            for (off, s) in [(1, 1), (2, -1), (3, -1), (4, 1)] {
                q.add_x(a, 2 * i + m + off, s);
                q.add_x(b, 2 * i + m + off, -s);
            }
        }
        q
    }

    fn add_x(&mut self, i: usize, j: usize, s: i64) {
        self.lambda[i - 1][j - 1] += s;
        self.lambda[j - 1][i - 1] -= s;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.lambda.len()
    }

    /// Entry `λ_{i,j}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.lambda[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    pub(crate) fn check_vertex(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.size() {
            Err(Error::IndexOutOfRange { index: k, size: self.size() })
        } else {
            Ok(())
        }
    }

    /// Matrix mutation at vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        self.check_vertex(k)?;
        let k0 = k - 1;
        let l = &self.lambda;
        let size = self.size();
        let mut out = l.clone();
        for i in 0..size {
            for j in 0..size {
                out[i][j] = if i == k0 || j == k0 {
                    -l[i][j]
                } else {
                    let (a, b) = (l[i][k0], l[k0][j]);
                    if a > 0 && b > 0 {
                        l[i][j] + a * b
                    } else if a < 0 && b < 0 {
                        l[i][j] - a * b
                    } else {
                        l[i][j]
                    }
                };
            }
        }
        let q = Quiver { n: self.n, lambda: out };
        debug_assert!(q.is_skew());
        Ok(q)
    }

    /// Relabeling with `λ'_{p(i),p(j)} = λ_{i,j}`.
    pub fn permute(&self, p: &VertexPerm) -> Result<Quiver> {
        if p.len() != self.size() {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points applied to {} vertices",
                p.len(),
                self.size()
            )));
        }
        let size = self.size();
        let mut out = vec![vec![0; size]; size];
        for i in 0..size {
            for j in 0..size {
                out[p.image(i + 1) - 1][p.image(j + 1) - 1] = self.lambda[i][j];
            }
        }
        Ok(Quiver { n: self.n, lambda: out })
    }

    /// Applies every elementary step of `word`, rightmost first.
    pub fn apply_word(&self, word: &GroupWord) -> Result<Quiver> {
        let mut q = self.clone();
        for e in word.expand(self.n)?.iter().rev() {
            q = match e {
                Elem::Mu(k) => q.mutate(*k)?,
                Elem::Perm(p) => q.permute(p)?,
            };
        }
        Ok(q)
    }

    /// Whether `word` maps this quiver to itself.
    pub fn is_invariant(&self, word: &GroupWord) -> Result<bool> {
        Ok(self.apply_word(word)? == *self)
    }

    fn is_skew(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| (0..s).all(|j| self.lambda[i][j] == -self.lambda[j][i]))
    }
}

/// Bijection of `{1..N}` acting on seeds by `y'_{p(i)} = y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexPerm {
    image: Vec<usize>,
}

impl VertexPerm {
    pub fn identity(size: usize) -> VertexPerm {
        VertexPerm { image: (1..=size).collect() }
    }

    /// One-line form: `image[i-1] = p(i)`.
    pub fn from_images(image: Vec<usize>) -> Result<VertexPerm> {
        let size = image.len();
        let mut seen = vec![false; size];
        for &v in &image {
            if v == 0 || v > size || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[v - 1] = true;
        }
        Ok(VertexPerm { image })
    }

    pub fn transposition(size: usize, i: usize, j: usize) -> Result<VertexPerm> {
        VertexPerm::from_cycles(size, &[vec![i, j]])
    }

    /// Product of disjoint cycles.
    ///
    /// A cycle `(c_0, …, c_{m−1})` moves the coefficient at `c_{j+1}` into
    /// slot `c_j`, the reading under which `(1,2,3) = (2,3)(1,2)` with the
    /// right factor acting first on coefficient tuples.
    pub fn from_cycles(size: usize, cycles: &[Vec<usize>]) -> Result<VertexPerm> {
        let mut image: Vec<usize> = (1..=size).collect();
        let mut used = vec![false; size];
        for c in cycles {
            for &v in c {
                if v == 0 || v > size {
                    return Err(Error::IndexOutOfRange { index: v, size });
                }
                if used[v - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} are not disjoint")));
                }
                used[v - 1] = true;
            }
            let m = c.len();
            for j in 0..m {
                image[c[(j + 1) % m] - 1] = c[j];
            }
        }
        Ok(VertexPerm { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `p(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> VertexPerm {
        let mut inv = vec![0; self.len()];
        for (i, &p) in self.image.iter().enumerate() {
            inv[p - 1] = i + 1;
        }
        VertexPerm { image: inv }
    }

    /// The permutation acting as `self` after `first` on seeds.
    pub fn after(&self, first: &VertexPerm) -> VertexPerm {
        VertexPerm { image: first.image.iter().map(|&i| self.image(i)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_listed_entries() {
        let q = Quiver::gen_qpvi(1);
        assert_eq!(q.get(1, 7), 1);
        assert_eq!(q.get(1, 8), -1);
        assert_eq!(q.get(1, 5), -1);
        assert_eq!(q.get(1, 6), 1);
        assert_eq!(q.size(), 8);
    }

    #[test]
    fn n2_row_three_hand_expansion() {
        // i = 1 term of the first sum for n = 2
        let q = Quiver::gen_qpvi(2);
        let row: Vec<(usize, i64)> = (1..=12).map(|j| (j, q.get(3, j))).filter(|(_, v)| *v != 0).collect();
        assert_eq!(row, vec![(7, 1), (8, -1), (9, -1), (10, 1)]);
    }

    #[test]
    fn entries_are_small_and_skew() {
        for n in 1..=4 {
            let q = Quiver::gen_qpvi(n);
            assert!(q.is_skew());
            assert!(q.matrix().iter().flatten().all(|v| v.abs() <= 1));
        }
    }

    #[test]
    fn path_mutation_adds_shortcut() {
        let q = Quiver::from_matrix(0, vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        let m = q.mutate(2).unwrap();
        assert_eq!(m.get(1, 3), 1);
        assert_eq!(m.get(1, 2), -1);
        assert_eq!(m.get(2, 3), -1);
    }

    #[test]
    fn mutation_flips_incident_edges_and_is_involutive() {
        for n in 1..=3 {
            let q = Quiver::gen_qpvi(n);
            for k in 1..=q.size() {
                let m = q.mutate(k).unwrap();
                for j in 1..=q.size() {
                    assert_eq!(m.get(k, j), -q.get(k, j));
                }
                assert_eq!(m.mutate(k).unwrap(), q);
            }
        }
    }

    #[test]
    fn out_of_range_vertex() {
        let q = Quiver::gen_qpvi(1);
        assert_eq!(q.mutate(9), Err(Error::IndexOutOfRange { index: 9, size: 8 }));
        assert!(q.mutate(0).is_err());
    }

    #[test]
    fn relabeling() {
        let q = Quiver::from_matrix(0, vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let t = VertexPerm::transposition(2, 1, 2).unwrap();
        let p = q.permute(&t).unwrap();
        assert_eq!(p.get(2, 1), 1);
        assert_eq!(p.permute(&t).unwrap(), q);
        assert_eq!(q.permute(&VertexPerm::identity(2)).unwrap(), q);
    }

    #[test]
    fn cycle_reading() {
        // (1,2,3): slot 1 receives the coefficient from slot 2
        let c = VertexPerm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.images(), &[3, 1, 2]);
        let t12 = VertexPerm::transposition(3, 1, 2).unwrap();
        let t23 = VertexPerm::transposition(3, 2, 3).unwrap();
        assert_eq!(t23.after(&t12), c);
        assert!(c.after(&c.inverse()).is_identity());
        assert!(VertexPerm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(VertexPerm::from_images(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::gen_qpvi(2);
        let s = serde_json::to_string(&q).unwrap();
        let back: Quiver = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Quiver>(r#"{"n":0,"lambda":[[0,1],[1,0]]}"#).is_err());
    }
}
