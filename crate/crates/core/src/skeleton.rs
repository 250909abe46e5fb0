//! Skeletons: connected bipartite ribbon graphs given by a black permutation
//! (cycles of length 1 or 3), a white permutation (cycles of length 1 or 2)
//! and the region permutation, on the edge set `0..n`.
//!
//! Maps are composed in the order the coset action applies them: the white
//! map is "black, then region", i.e. `white[e] = region[black[e]]`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("no edges")]
    Empty,
    #[error("{0} is not a permutation of 0..n")]
    NotPermutation(&'static str),
    #[error("black vertex of valency {0}; only 1 and 3 are allowed")]
    BlackValency(usize),
    #[error("white vertex of valency {0}; only 1 and 2 are allowed")]
    WhiteValency(usize),
    #[error("the skeleton is not connected")]
    NotTransitive,
    #[error("region map does not satisfy white = region after black")]
    RelationViolated,
    #[error("cannot parse signature '{0}'")]
    BadSignature(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Skeleton {
    black: Vec<u32>,
    white: Vec<u32>,
    region: Vec<u32>,
}

fn check_perm(p: &[u32], n: usize, name: &'static str) -> Result<(), SkeletonError> {
    if p.len() != n {
        return Err(SkeletonError::NotPermutation(name));
    }
    let mut seen = vec![false; n];
    for &x in p {
        let x = x as usize;
        if x >= n || seen[x] {
            return Err(SkeletonError::NotPermutation(name));
        }
        seen[x] = true;
    }
    Ok(())
}

fn invert(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Cycle lengths of a permutation, in order of smallest element.
pub fn cycle_lengths(p: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Cycles of a permutation, each starting at its smallest element.
pub fn cycles(p: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x as u32);
            x = p[x] as usize;
        }
        out.push(cyc);
    }
    out
}

impl Skeleton {
    /// Builds a skeleton from its black and white permutations; the region
    /// permutation is `white ∘ black⁻¹`.
    pub fn from_permutations(black: Vec<u32>, white: Vec<u32>) -> Result<Self, SkeletonError> {
        let n = black.len();
        if n == 0 {
            return Err(SkeletonError::Empty);
        }
        check_perm(&black, n, "black")?;
        check_perm(&white, n, "white")?;
        let binv = invert(&black);
        let region = binv.iter().map(|&b| white[b as usize]).collect();
        let sk = Self { black, white, region };
        sk.validate()?;
        Ok(sk)
    }

    /// As [`Skeleton::from_permutations`], additionally checking a supplied region map.
    pub fn from_triple(black: Vec<u32>, white: Vec<u32>, region: Vec<u32>) -> Result<Self, SkeletonError> {
        check_perm(&region, black.len(), "region")?;
        let sk = Self::from_permutations(black, white)?;
        if sk.region != region {
            return Err(SkeletonError::RelationViolated);
        }
        Ok(sk)
    }

    fn validate(&self) -> Result<(), SkeletonError> {
        if let Some(&v) = cycle_lengths(&self.black).iter().find(|&&l| l != 1 && l != 3) {
            return Err(SkeletonError::BlackValency(v));
        }
        if let Some(&v) = cycle_lengths(&self.white).iter().find(|&&l| l != 1 && l != 2) {
            return Err(SkeletonError::WhiteValency(v));
        }
        let n = self.n_edges();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(e) = queue.pop_front() {
            for next in [self.black[e], self.white[e]] {
                let next = next as usize;
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    queue.push_back(next);
                }
            }
        }
        if count != n {
            return Err(SkeletonError::NotTransitive);
        }
        Ok(())
    }

    pub fn n_edges(&self) -> usize {
        self.black.len()
    }

    pub fn black(&self) -> &[u32] {
        &self.black
    }

    pub fn white(&self) -> &[u32] {
        &self.white
    }

    pub fn region(&self) -> &[u32] {
        &self.region
    }

    /// `#black + #white − #edges + #regions`.
    pub fn euler_characteristic(&self) -> i64 {
        cycle_lengths(&self.black).len() as i64 + cycle_lengths(&self.white).len() as i64
            - self.n_edges() as i64
            + cycle_lengths(&self.region).len() as i64
    }

    pub fn signature(&self) -> Signature {
        let chi = self.euler_characteristic();
        assert!(chi % 2 == 0 && chi <= 2, "Euler characteristic {chi} of a connected skeleton");
        let c3 = cycle_lengths(&self.black).iter().filter(|&&l| l == 1).count() as u64;
        let c2 = cycle_lengths(&self.white).iter().filter(|&&l| l == 1).count() as u64;
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for w in cycle_lengths(&self.region) {
            *counts.entry(w as u64).or_default() += 1;
        }
        Signature {
            index: self.n_edges() as u64,
            c2,
            c3,
            widths: counts.into_iter().collect(),
            genus: ((2 - chi) / 2) as u64,
        }
    }

    /// Relabels edges so that `perm[old] = new`.
    fn relabel(&self, perm: &[u32]) -> Self {
        let n = self.n_edges();
        let mut black = vec![0; n];
        let mut white = vec![0; n];
        let mut region = vec![0; n];
        for e in 0..n {
            let ne = perm[e] as usize;
            black[ne] = perm[self.black[e] as usize];
            white[ne] = perm[self.white[e] as usize];
            region[ne] = perm[self.region[e] as usize];
        }
        Self { black, white, region }
    }

    /// Breadth-first numbering starting at `root`, following black then white.
    fn bfs_labels(&self, root: usize) -> Vec<u32> {
        let n = self.n_edges();
        let mut label = vec![u32::MAX; n];
        label[root] = 0;
        let mut next = 1u32;
        let mut queue = VecDeque::from([root]);
        while let Some(e) = queue.pop_front() {
            for f in [self.black[e], self.white[e]] {
                let f = f as usize;
                if label[f] == u32::MAX {
                    label[f] = next;
                    next += 1;
                    queue.push_back(f);
                }
            }
        }
        label
    }

    /// Canonical representative of the isomorphism class (edge relabelings
    /// commuting with both permutations): the least relabeled triple over
    /// all choices of root edge.
    pub fn canonical(&self) -> Self {
        (0..self.n_edges())
            .map(|root| self.relabel(&self.bfs_labels(root)))
            .min_by(|a, b| (&a.black, &a.white).cmp(&(&b.black, &b.white)))
            .unwrap()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n_edges() == other.n_edges() && self.canonical() == other.canonical()
    }

    /// Deterministic Graphviz rendering: black vertices filled, white hollow,
    /// one graph edge per skeleton edge labeled with its id and region.
    pub fn to_dot(&self) -> String {
        let black_cycles = cycles(&self.black);
        let white_cycles = cycles(&self.white);
        let region_cycles = cycles(&self.region);
        let n = self.n_edges();
        let mut bv = vec![0usize; n];
        let mut wv = vec![0usize; n];
        let mut rv = vec![0usize; n];
        for (i, c) in black_cycles.iter().enumerate() {
            c.iter().for_each(|&e| bv[e as usize] = i);
        }
        for (i, c) in white_cycles.iter().enumerate() {
            c.iter().for_each(|&e| wv[e as usize] = i);
        }
        for (i, c) in region_cycles.iter().enumerate() {
            c.iter().for_each(|&e| rv[e as usize] = i);
        }
        let mut out = String::from("digraph skeleton {\n");
        out.push_str("  edge [arrowhead=none];\n");
        for i in 0..black_cycles.len() {
            let _ = writeln!(out, "  b{i} [shape=circle, style=filled, fillcolor=black, label=\"\"];");
        }
        for i in 0..white_cycles.len() {
            let _ = writeln!(out, "  w{i} [shape=circle, label=\"\"];");
        }
        for e in 0..n {
            let _ = writeln!(
                out,
                "  b{} -> w{} [label=\"e{} r{}\"];",
                bv[e], wv[e], e, rv[e]
            );
        }
        for (i, c) in region_cycles.iter().enumerate() {
            let _ = writeln!(out, "  // region r{i}: width {}", c.len());
        }
        out.push_str("}\n");
        out
    }

    /// The skeleton with one edge, a monovalent vertex of each color.
    pub fn single_edge() -> Self {
        Self::from_permutations(vec![0], vec![0]).unwrap()
    }
}

/// Index, monovalent white/black counts, region widths and genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub index: u64,
    pub c2: u64,
    pub c3: u64,
    /// `(width, multiplicity)`, ascending by width.
    pub widths: Vec<(u64, u64)>,
    pub genus: u64,
}

impl Signature {
    /// Partition notation, e.g. `1^2 12^1`.
    pub fn partition(&self) -> String {
        self.widths.iter().map(|(w, m)| format!("{w}^{m}")).collect::<Vec<_>>().join(" ")
    }

    /// The table notation `(index;c2;c3;partition)`.
    pub fn table_form(&self) -> String {
        format!("({};{};{};{})", self.index, self.c2, self.c3, self.partition())
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64
    }

    pub fn width_count(&self, w: u64) -> u64 {
        self.widths.iter().find(|(x, _)| *x == w).map_or(0, |(_, m)| *m)
    }

    /// `6χ = 3c2 + 4c3 + Σ(6 − w)`, which follows from counting vertices.
    pub fn euler_identity_holds(&self) -> bool {
        let rhs: i64 = 3 * self.c2 as i64
            + 4 * self.c3 as i64
            + self.widths.iter().map(|&(w, m)| (6 - w as i64) * m as i64).sum::<i64>();
        6 * self.euler_characteristic() == rhs
    }

    /// For genus 0 with widths in {1,2,3,6}: `3c2 + 4c3 + 5n1 + 4n2 + 3n3 = 12`.
    /// `None` when the hypotheses fail.
    pub fn small_width_identity(&self) -> Option<bool> {
        if self.genus != 0 || self.widths.iter().any(|(w, _)| ![1, 2, 3, 6].contains(w)) {
            return None;
        }
        let lhs = 3 * self.c2 + 4 * self.c3 + 5 * self.width_count(1) + 4 * self.width_count(2)
            + 3 * self.width_count(3);
        Some(lhs == 12)
    }
}

impl FromStr for Signature {
    type Err = SkeletonError;

    /// Parses `(14;0;2;1^2 12^1)`; the genus is set to 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SkeletonError::BadSignature(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let num = |x: &str| x.parse::<u64>().map_err(|_| bad());
        let mut widths = Vec::new();
        for tok in parts[3].split_whitespace() {
            let (w, m) = tok.split_once('^').ok_or_else(bad)?;
            widths.push((num(w)?, num(m)?));
        }
        widths.sort();
        Ok(Signature { index: num(parts[0])?, c2: num(parts[1])?, c3: num(parts[2])?, widths, genus: 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_signature() {
        let sk = Skeleton::single_edge();
        let sig = sk.signature();
        assert_eq!(sig, Signature { index: 1, c2: 1, c3: 1, widths: vec![(1, 1)], genus: 0 });
        assert_eq!(sig.small_width_identity(), Some(true));
        assert_eq!(sk.region(), &[0]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Skeleton::from_permutations(vec![1, 0], vec![0, 1]),
            Err(SkeletonError::BlackValency(2))
        );
        assert_eq!(
            Skeleton::from_permutations(vec![1, 2, 0], vec![1, 2, 0]),
            Err(SkeletonError::WhiteValency(3))
        );
        assert_eq!(
            Skeleton::from_permutations(vec![0, 1], vec![0, 1]),
            Err(SkeletonError::NotTransitive)
        );
        assert_eq!(
            Skeleton::from_permutations(vec![0, 0], vec![0, 1]),
            Err(SkeletonError::NotPermutation("black"))
        );
        assert_eq!(
            Skeleton::from_triple(vec![0], vec![0], vec![0]).map(|s| s.n_edges()),
            Ok(1)
        );
    }

    #[test]
    fn region_relation() {
        // a trivalent black vertex with three white monovalent ends
        let sk = Skeleton::from_permutations(vec![1, 2, 0], vec![0, 1, 2]).unwrap();
        for e in 0..3 {
            assert_eq!(sk.white()[e], sk.region()[sk.black()[e] as usize]);
        }
        let sig = sk.signature();
        assert_eq!(sig.table_form(), "(3;3;0;3^1)");
        assert_eq!(sig.genus, 0);
        assert!(sig.euler_identity_holds());
    }

    #[test]
    fn signature_parse_and_print() {
        let s: Signature = "(14;0;2;1^2 12^1)".parse().unwrap();
        assert_eq!(s.widths, vec![(1, 2), (12, 1)]);
        assert_eq!(s.table_form(), "(14;0;2;1^2 12^1)");
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"index":14,"c2":0,"c3":2,"widths":[[1,2],[12,1]],"genus":0}"#
        );
        assert!("(14;0;2)".parse::<Signature>().is_err());
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let a = Skeleton::from_permutations(vec![1, 2, 0, 3], vec![0, 1, 3, 2]).unwrap();
        let relabel = [2u32, 0, 3, 1];
        let b = a.relabel(&relabel);
        assert!(a.is_isomorphic(&b));
        let c = Skeleton::from_permutations(vec![1, 2, 0, 3], vec![3, 1, 2, 0]).unwrap();
        assert_eq!(a.signature(), c.signature());
        assert!(a.is_isomorphic(&c));
    }

    #[test]
    fn dot_is_stable() {
        let sk = Skeleton::single_edge();
        let dot = sk.to_dot();
        assert_eq!(dot, sk.to_dot());
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.contains("b0 [") && dot.contains("w0 ["));
    }
}
