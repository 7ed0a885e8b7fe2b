//! Root data of split simple groups of rank at most eight, together with the
//! Weyl-group operations used throughout the crate.
//!
//! Node indices are zero-based internally and printed one-based. The Dynkin
//! labeling is Bourbaki's: for `E_n` the chain is `1-3-4-5-6(-7-8)` with node
//! `2` attached to node `4`; in `F4` nodes `1,2` are long and `3,4` short; in
//! `G2` node `1` is short.
//!
//! Weights are stored in the fundamental-weight basis, so the pairing of a
//! weight with the simple coroot `α_i∨` is simply its `i`-th coordinate.
//! Roots are stored in the simple-root basis and coroots in the simple-coroot
//! basis, index-aligned.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Q};

/// A set of Dynkin nodes, stored as a bitmask.
pub type NodeSet = u16;

/// The letter of a Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `F4` or `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self, Error> {
        let ok = match series {
            Series::A => (1..=8).contains(&rank),
            Series::B | Series::C => (2..=8).contains(&rank),
            Series::D => (4..=8).contains(&rank),
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::UnsupportedType(alloc::format!("{:?}{}", series, rank)))
        }
    }

    /// True when `-1` lies in the Weyl group.
    pub fn has_minus_one(&self) -> bool {
        match self.series {
            Series::A => self.rank == 1,
            Series::B | Series::C | Series::F | Series::G => true,
            Series::D => self.rank.is_multiple_of(2),
            Series::E => self.rank != 6,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.series, Series::E | Series::F | Series::G)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnsupportedType(String::from(s)))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(Error::UnsupportedType(String::from(s))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(String::from(s)))?;
        CartanType::new(series, rank)
    }
}

/// An element of the Weyl group, kept as its lexicographically least reduced
/// word. The word `[i1, i2, ..., ik]` denotes `s_{i1} s_{i2} ... s_{ik}`, so
/// the rightmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Renders as `w4w3w1w2`, or `e` for the identity.
    pub fn compact(&self) -> String {
        if self.word.is_empty() {
            return String::from("e");
        }
        let mut s = String::new();
        for &l in &self.word {
            s.push('w');
            push_index(&mut s, l as usize + 1);
        }
        s
    }

    /// Renders in the LaTeX style `w_{4}w_{3}`, or `1` for the identity.
    pub fn latex(&self) -> String {
        if self.word.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        for &l in &self.word {
            s.push_str("w_{");
            push_index(&mut s, l as usize + 1);
            s.push('}');
        }
        s
    }
}

fn push_index(s: &mut String, k: usize) {
    use core::fmt::Write;
    let _ = write!(s, "{}", k);
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// One node of the tree of minimal coset representatives produced by
/// [`RootDatum::coset_tree`]. The element at this node is
/// `s_letter · (element at parent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetNode {
    pub parent: u32,
    pub letter: u8,
    pub length: u16,
}

/// The minimal-length representatives of `W / W_L` for a Levi node set `L`,
/// arranged as a breadth-first tree rooted at the identity.
#[derive(Clone, Debug)]
pub struct CosetTree {
    pub levi: NodeSet,
    pub nodes: Vec<CosetNode>,
}

impl CosetTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The (not necessarily canonical) reduced word of node `k`.
    pub fn raw_word(&self, mut k: usize) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.nodes[k].length as usize);
        while k != 0 {
            w.push(self.nodes[k].letter);
            k = self.nodes[k].parent as usize;
        }
        w
    }
}

/// Root datum of a split simple group.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in the simple-root basis, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in the simple-coroot basis, aligned with `positive_roots`.
    pub positive_coroots: Vec<Vec<i64>>,
    /// Positive roots in the fundamental-weight basis.
    pub roots_in_weights: Vec<Vec<i64>>,
    /// Squared root lengths of the simple roots (integral, up to scale).
    pub simple_lengths: Vec<i64>,
    /// The inverse Cartan matrix, used to change from weights to simple roots.
    inverse_cartan: Vec<Vec<Q>>,
    root_index: BTreeMap<Vec<i64>, usize>,
}

#[allow(clippy::needless_range_loop)]
fn gram(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.series {
        Series::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Series::B => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Series::C => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Series::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Series::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Series::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Series::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

#[allow(clippy::needless_range_loop)]
fn invert(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Q::from_integer(0)).expect("Cartan matrix is invertible");
        m.swap(c, p);
        let inv = Q::from_integer(1) / m[c][c];
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && m[r][c] != Q::from_integer(0) {
                let f = m[r][c];
                for k in 0..2 * n {
                    let v = m[c][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootDatum {
    pub fn new(t: CartanType) -> Self {
        let g = gram(t);
        let n = t.rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * g[i][j] / g[i][i]).collect())
            .collect();
        let simple_lengths = (0..n).map(|i| g[i][i]).collect();

        // Simultaneous closure of roots and coroots under simple reflections.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut coroots: Vec<Vec<i64>> = Vec::new();
        let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone(), roots.len());
            roots.push(e.clone());
            coroots.push(e);
            queue.push_back(i);
        }
        while let Some(k) = queue.pop_front() {
            for j in 0..n {
                let a = roots[k].clone();
                let c = coroots[k].clone();
                let p: i64 = (0..n).map(|m| a[m] * cartan[j][m]).sum();
                let q: i64 = (0..n).map(|m| c[m] * cartan[m][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut na = a;
                na[j] -= p;
                let mut nc = c;
                nc[j] -= q;
                if na.iter().all(|&x| x >= 0) && !seen.contains_key(&na) {
                    seen.insert(na.clone(), roots.len());
                    roots.push(na);
                    coroots.push(nc);
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&x, &y| {
            let hx: i64 = roots[x].iter().sum();
            let hy: i64 = roots[y].iter().sum();
            hx.cmp(&hy).then_with(|| roots[y].cmp(&roots[x]))
        });
        let positive_roots: Vec<Vec<i64>> = order.iter().map(|&k| roots[k].clone()).collect();
        let positive_coroots: Vec<Vec<i64>> = order.iter().map(|&k| coroots[k].clone()).collect();
        let roots_in_weights = positive_roots
            .iter()
            .map(|r| (0..n).map(|i| (0..n).map(|j| cartan[i][j] * r[j]).sum()).collect())
            .collect();
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let inverse_cartan = invert(&cartan);
        RootDatum {
            cartan_type: t,
            cartan,
            positive_roots,
            positive_coroots,
            roots_in_weights,
            simple_lengths,
            inverse_cartan,
            root_index,
        }
    }

    pub fn from_label(label: &str) -> Result<Self, Error> {
        Ok(RootDatum::new(label.parse()?))
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn all_nodes(&self) -> NodeSet {
        ((1u32 << self.rank()) - 1) as NodeSet
    }

    /// The Levi node set of the maximal parabolic omitting node `i`.
    pub fn maximal_levi(&self, i: usize) -> NodeSet {
        self.all_nodes() & !(1 << i)
    }

    pub fn root_position(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// True when the positive root with index `k` lies in the span of `levi`.
    pub fn root_in_levi(&self, k: usize, levi: NodeSet) -> bool {
        self.positive_roots[k]
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || levi & (1 << i) != 0)
    }

    /// Height of the coroot aligned with positive root `k`.
    pub fn coroot_height(&self, k: usize) -> i64 {
        self.positive_coroots[k].iter().sum()
    }

    /// In-place simple reflection of a weight (fundamental-weight basis).
    pub fn reflect<T>(&self, i: usize, lambda: &mut [T])
    where
        T: Clone + core::ops::SubAssign + core::ops::Mul<i64, Output = T>,
    {
        let li = lambda[i].clone();
        for (k, x) in lambda.iter_mut().enumerate() {
            let a = self.cartan[k][i];
            if a != 0 {
                *x -= li.clone() * a;
            }
        }
    }

    /// In-place simple reflection of a root given in the simple-root basis.
    pub fn reflect_root(&self, i: usize, root: &mut [i64]) {
        let p: i64 = root.iter().enumerate().map(|(m, &c)| c * self.cartan[i][m]).sum();
        root[i] -= p;
    }

    /// Applies a word (rightmost letter first) to a weight.
    pub fn apply_word<T>(&self, word: &[u8], lambda: &mut [T])
    where
        T: Clone + core::ops::SubAssign + core::ops::Mul<i64, Output = T>,
    {
        for &l in word.iter().rev() {
            self.reflect(l as usize, lambda);
        }
    }

    pub fn apply(&self, w: &WeylElement, lambda: &[Q]) -> Vec<Q> {
        let mut v = lambda.to_vec();
        self.apply_word(&w.word, &mut v);
        v
    }

    pub fn apply_to_root(&self, w: &WeylElement, root: &[i64]) -> Vec<i64> {
        let mut r = root.to_vec();
        for &l in w.word.iter().rev() {
            self.reflect_root(l as usize, &mut r);
        }
        r
    }

    /// The canonical element represented by an arbitrary word.
    pub fn element(&self, word: &[u8]) -> WeylElement {
        let mut mu = vec![1i64; self.rank()];
        self.apply_word(word, &mut mu);
        self.element_from_rho_image(mu)
    }

    pub fn element_from_indices(&self, word: &[usize]) -> WeylElement {
        let w: Vec<u8> = word.iter().map(|&x| x as u8).collect();
        self.element(&w)
    }

    /// Reads the lexicographically least reduced word of the element `w`
    /// with `w·ρ = mu`.
    fn element_from_rho_image(&self, mut mu: Vec<i64>) -> WeylElement {
        let mut word = Vec::new();
        while let Some(i) = mu.iter().position(|&x| x < 0) {
            word.push(i as u8);
            self.reflect(i, &mut mu);
        }
        WeylElement { word }
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut w = a.word.clone();
        w.extend_from_slice(&b.word);
        self.element(&w)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut r = w.word.clone();
        r.reverse();
        self.element(&r)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| self.apply_to_root(w, r).iter().any(|&c| c < 0))
            .count()
    }

    /// Indices of the positive roots `β` with `w·β < 0`.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.num_positive_roots())
            .filter(|&k| self.apply_to_root(w, &self.positive_roots[k]).iter().any(|&c| c < 0))
            .collect()
    }

    /// The longest element of the parabolic subgroup generated by `nodes`.
    pub fn longest_element(&self, nodes: NodeSet) -> WeylElement {
        let n = self.rank();
        let mut lambda: Vec<i64> = (0..n).map(|i| ((nodes >> i) & 1) as i64).collect();
        let mut word = Vec::new();
        while let Some(j) = (0..n).find(|&j| nodes & (1 << j) != 0 && lambda[j] > 0) {
            self.reflect(j, &mut lambda);
            word.push(j as u8);
        }
        word.reverse();
        self.element(&word)
    }

    /// The minimal representative of `w_{0,P}` in `W_P / W_R` for `R ⊆ P`.
    pub fn shortest_rep_of_longest(&self, p: NodeSet, r: NodeSet) -> WeylElement {
        debug_assert!(r & !p == 0);
        self.compose(&self.longest_element(p), &self.longest_element(r))
    }

    /// The dominant weight in the orbit of `lambda` together with the shortest
    /// element carrying `lambda` to it.
    pub fn dominant_representative(&self, lambda: &[Q]) -> (Vec<Q>, WeylElement) {
        let zero = Q::from_integer(0);
        let mut mu = lambda.to_vec();
        let mut word = Vec::new();
        while let Some(i) = mu.iter().position(|x| *x < zero) {
            self.reflect(i, &mut mu);
            word.push(i as u8);
        }
        word.reverse();
        let w = self.element(&word);
        (mu, w)
    }

    /// Tree of minimal representatives of `W / W_levi`, in breadth-first order.
    pub fn coset_tree(&self, levi: NodeSet) -> CosetTree {
        let n = self.rank();
        let start: Vec<i64> = (0..n).map(|i| ((levi >> i) & 1 == 0) as i64).collect();
        let mut seen: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
        let mut nodes = vec![CosetNode { parent: 0, letter: 0, length: 0 }];
        let mut weights = vec![start.clone()];
        seen.insert(start, 0);
        let mut head = 0usize;
        while head < nodes.len() {
            for j in 0..n {
                if weights[head][j] > 0 {
                    let mut nw = weights[head].clone();
                    self.reflect(j, &mut nw);
                    if !seen.contains_key(&nw) {
                        seen.insert(nw.clone(), nodes.len() as u32);
                        nodes.push(CosetNode {
                            parent: head as u32,
                            letter: j as u8,
                            length: nodes[head].length + 1,
                        });
                        weights.push(nw);
                    }
                }
            }
            head += 1;
        }
        CosetTree { levi, nodes }
    }

    /// Canonical minimal representatives of `W / W_levi`.
    pub fn coset_representatives(&self, levi: NodeSet) -> Vec<WeylElement> {
        let tree = self.coset_tree(levi);
        (0..tree.len()).map(|k| self.element(&tree.raw_word(k))).collect()
    }

    /// Converts a weight to simple-root coordinates.
    pub fn weight_to_roots(&self, lambda: &[Q]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).fold(Q::from_integer(0), |acc, j| acc + self.inverse_cartan[i][j] * lambda[j]))
            .collect()
    }

    /// Converts simple-root coordinates to a weight.
    pub fn roots_to_weight(&self, coeffs: &[Q]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).fold(Q::from_integer(0), |acc, j| acc + coeffs[j] * self.cartan[i][j]))
            .collect()
    }

    /// `⟨λ, β∨⟩` for the coroot aligned with positive root `k`.
    pub fn pair_coroot(&self, lambda: &[Q], k: usize) -> Q {
        self.positive_coroots[k]
            .iter()
            .zip(lambda)
            .fold(Q::from_integer(0), |acc, (&c, x)| acc + *x * c)
    }

    /// `ρ`, the half sum of positive roots, in the weight basis.
    pub fn rho(&self) -> Vec<Q> {
        vec![Q::from_integer(1); self.rank()]
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::from_integer(0); self.rank()];
        v[i] = Q::from_integer(1);
        v
    }

    /// Order of the parabolic subgroup generated by `nodes`, computed from the
    /// orbit sizes of a tower of parabolics.
    pub fn parabolic_order(&self, nodes: NodeSet) -> u64 {
        let mut order = 1u64;
        let mut current: NodeSet = 0;
        for i in 0..self.rank() {
            if nodes & (1 << i) != 0 {
                let bigger = current | (1 << i);
                order *= self.relative_coset_count(bigger, current) as u64;
                current = bigger;
            }
        }
        order
    }

    /// `|W_big / W_small|` for `small ⊆ big`, by orbit enumeration inside `W_big`.
    fn relative_coset_count(&self, big: NodeSet, small: NodeSet) -> usize {
        let n = self.rank();
        let start: Vec<i64> = (0..n).map(|i| ((small >> i) & 1 == 0) as i64).collect();
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert(start.clone());
        let mut stack = vec![start];
        while let Some(w) = stack.pop() {
            for j in 0..n {
                if big & (1 << j) != 0 && w[j] != 0 {
                    let mut nw = w.clone();
                    self.reflect(j, &mut nw);
                    if seen.insert(nw.clone()) {
                        stack.push(nw);
                    }
                }
            }
        }
        seen.len()
    }

    pub fn weyl_order(&self) -> u64 {
        self.parabolic_order(self.all_nodes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    /// Independent closure oracle: repeatedly reflect the full root set until
    /// stable, counting positives.
    fn closure_count(d: &RootDatum) -> usize {
        let n = d.rank();
        let mut set = alloc::collections::BTreeSet::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            set.insert(e);
        }
        loop {
            let before = set.len();
            let current: Vec<_> = set.iter().cloned().collect();
            for r in current {
                for j in 0..n {
                    let mut x = r.clone();
                    d.reflect_root(j, &mut x);
                    set.insert(x);
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.iter().filter(|r| r.iter().all(|&c| c >= 0)).count()
    }

    #[test]
    fn positive_root_counts_match_closure() {
        for (label, count) in [("A1", 1), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("B3", 9), ("C4", 16), ("D5", 20)] {
            let d = RootDatum::from_label(label).unwrap();
            assert_eq!(d.num_positive_roots(), count, "{label}");
            assert_eq!(closure_count(&d), count, "{label}");
        }
    }

    #[test]
    fn cartan_axioms() {
        for label in ["A4", "B4", "C3", "D6", "E8", "F4", "G2"] {
            let d = RootDatum::from_label(label).unwrap();
            let n = d.rank();
            for i in 0..n {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(d.cartan[i][j] <= 0);
                        assert_eq!(d.cartan[i][j] == 0, d.cartan[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn labeling_of_exceptional_diagrams() {
        let g2 = RootDatum::from_label("G2").unwrap();
        assert_eq!(g2.cartan, vec![vec![2, -3], vec![-1, 2]]);
        let f4 = RootDatum::from_label("F4").unwrap();
        assert_eq!(f4.cartan[1][2], -1);
        assert_eq!(f4.cartan[2][1], -2);
        let e6 = RootDatum::from_label("E6").unwrap();
        assert_eq!(e6.cartan[1][3], -1);
        assert_eq!(e6.cartan[0][2], -1);
        assert_eq!(e6.cartan[1][2], 0);
    }

    #[test]
    fn coroot_pairs_with_root_to_two() {
        for label in ["G2", "F4", "B3", "C3", "E7"] {
            let d = RootDatum::from_label(label).unwrap();
            for k in 0..d.num_positive_roots() {
                let w: Vec<Q> = d.roots_in_weights[k].iter().map(|&x| Q::from_integer(x)).collect();
                assert_eq!(d.pair_coroot(&w, k), Q::from_integer(2));
            }
        }
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!("E9".parse::<CartanType>().is_err());
        assert!("A9".parse::<CartanType>().is_err());
        assert!("F5".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn identity_and_simple_reflection_actions() {
        let d = RootDatum::from_label("F4").unwrap();
        let lam: Vec<Q> = vec![q(1, 2), q(-3, 1), q(2, 7), q(0, 1)];
        assert_eq!(d.apply(&WeylElement::identity(), &lam), lam);
        for i in 0..4 {
            let s = d.element(&[i as u8]);
            let img = d.apply(&s, &d.fundamental_weight(i));
            let mut expected = d.fundamental_weight(i);
            for k in 0..4 {
                expected[k] -= Q::from_integer(d.cartan[k][i]);
            }
            assert_eq!(img, expected);
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn g2_product_matches_reflection_matrices() {
        let d = RootDatum::from_label("G2").unwrap();
        // Matrix of s_i on the weight basis: column j is s_i(ϖ_j).
        let mat = |i: usize| -> [[i64; 2]; 2] {
            let mut m = [[0i64; 2]; 2];
            for j in 0..2 {
                for k in 0..2 {
                    let delta = (j == k) as i64;
                    let sub = if j == i { d.cartan[k][i] } else { 0 };
                    m[k][j] = delta - sub;
                }
            }
            m
        };
        let a = mat(0);
        let b = mat(1);
        let mut prod = [[0i64; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                prod[r][c] = (0..2).map(|k| a[r][k] * b[k][c]).sum();
            }
        }
        let w = d.element(&[0, 1]);
        let img = d.apply(&w, &d.fundamental_weight(0));
        assert_eq!(img, vec![Q::from_integer(prod[0][0]), Q::from_integer(prod[1][0])]);
    }

    #[test]
    fn coset_counts() {
        let g2 = RootDatum::from_label("G2").unwrap();
        assert_eq!(g2.coset_representatives(g2.maximal_levi(0)).len(), 6);
        let f4 = RootDatum::from_label("F4").unwrap();
        assert_eq!(f4.coset_representatives(f4.maximal_levi(0)).len(), 24);
        assert_eq!(f4.weyl_order(), 1152);
        assert_eq!(f4.coset_representatives(f4.all_nodes()), vec![WeylElement::identity()]);
        let e7 = RootDatum::from_label("E7").unwrap();
        assert_eq!(e7.weyl_order(), 2903040);
        assert_eq!(e7.coset_tree(e7.maximal_levi(3)).len(), 10080);
    }

    #[test]
    fn coset_representatives_are_minimal() {
        let f4 = RootDatum::from_label("F4").unwrap();
        for i in 0..4 {
            let levi = f4.maximal_levi(i);
            for w in f4.coset_representatives(levi) {
                for j in 0..4 {
                    if levi & (1 << j) != 0 {
                        let mut e = vec![0i64; 4];
                        e[j] = 1;
                        assert!(f4.apply_to_root(&w, &e).iter().all(|&c| c >= 0));
                    }
                }
                assert_eq!(w.length(), f4.inversion_count(&w));
            }
        }
    }

    #[test]
    fn longest_elements() {
        let g2 = RootDatum::from_label("G2").unwrap();
        assert!(g2.longest_element(0).is_identity());
        let w0 = g2.longest_element(g2.all_nodes());
        assert_eq!(w0.length(), 6);
        assert_eq!(g2.inversion_count(&w0), 6);
        let f4 = RootDatum::from_label("F4").unwrap();
        let wp2 = f4.longest_element(f4.maximal_levi(1));
        assert_eq!(wp2, f4.element(&[2, 3, 2, 0]));
        let rel = f4.shortest_rep_of_longest(f4.maximal_levi(1), 0b0001);
        assert_eq!(rel.length(), 3);
    }

    #[test]
    fn canonical_words_are_lex_least() {
        let g2 = RootDatum::from_label("G2").unwrap();
        let w = g2.element(&[1, 0, 1, 0, 1, 0]);
        assert_eq!(w.word(), &[0, 1, 0, 1, 0, 1]);
        let e = g2.element(&[0, 0]);
        assert!(e.is_identity());
    }

    #[test]
    fn dominant_representative_matches_orbit_minimum() {
        let d = RootDatum::from_label("G2").unwrap();
        let all = d.coset_representatives(0);
        assert_eq!(all.len(), 12);
        for lam in [vec![q(-3, 2), q(1, 3)], vec![q(2, 1), q(-5, 1)], vec![q(-1, 1), q(-1, 1)], vec![q(0, 1), q(1, 2)]] {
            let (dom, w) = d.dominant_representative(&lam);
            assert_eq!(d.apply(&w, &lam), dom);
            assert!(dom.iter().all(|x| *x >= Q::from_integer(0)));
            let best = all
                .iter()
                .filter(|u| d.apply(u, &lam) == dom)
                .map(|u| u.length())
                .min()
                .unwrap();
            assert_eq!(best, w.length());
        }
        let a1 = RootDatum::from_label("A1").unwrap();
        let (dom, w) = a1.dominant_representative(&[Q::from_integer(-1)]);
        assert_eq!(dom, vec![Q::from_integer(1)]);
        assert_eq!(w.word(), &[0]);
    }
}
