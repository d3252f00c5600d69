//! Brute-force maximum code sizes on tiny finite spaces.
//!
//! A distance set turns a finite space into a compatibility graph: points are
//! vertices and two points are adjacent when their distance lies in the set.
//! The exact maximum code size is the maximum clique of that graph, found by
//! branch and bound with greedy-coloring upper bounds.
//!
//! Both spaces are point-transitive, so some maximum code contains the
//! canonical base point (the zero word, or the subset `{0..w-1}`); the search
//! therefore fixes the base point and explores only its neighborhood.

use crate::exact::BigInt;
use crate::expansion::DistanceSet;
use crate::spaces::Space;
use crate::{Error, Result};

/// Default vertex budget: spaces above this size are refused.
pub const DEFAULT_VERTEX_LIMIT: usize = 1 << 16;

/// A point of a finite space, for emission and verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodePoint {
    /// Hamming word as digit vector.
    Word(Vec<u8>),
    /// Johnson point as the sorted support of a w-subset.
    Set(Vec<u32>),
}

impl CodePoint {
    /// Distance between two points of the same space.
    pub fn distance(&self, other: &CodePoint) -> u64 {
        match (self, other) {
            (CodePoint::Word(a), CodePoint::Word(b)) => {
                a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
            }
            (CodePoint::Set(a), CodePoint::Set(b)) => {
                let inter = a.iter().filter(|x| b.contains(x)).count() as u64;
                a.len() as u64 - inter
            }
            _ => panic!("mixed point kinds"),
        }
    }
}

impl std::fmt::Display for CodePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CodePoint::Word(digits) => {
                for d in digits {
                    write!(f, "{d}")?;
                }
                Ok(())
            }
            CodePoint::Set(support) => {
                write!(f, "{{")?;
                for (i, x) in support.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

enum PointTable {
    BinaryWords { n: u32, words: Vec<u64> },
    QaryWords { words: Vec<Vec<u8>> },
    Subsets { w: u32, supports: Vec<Vec<u32>> },
}

impl PointTable {
    fn len(&self) -> usize {
        match self {
            PointTable::BinaryWords { words, .. } => words.len(),
            PointTable::QaryWords { words } => words.len(),
            PointTable::Subsets { supports, .. } => supports.len(),
        }
    }

    fn distance(&self, i: usize, j: usize) -> u64 {
        match self {
            PointTable::BinaryWords { words, .. } => (words[i] ^ words[j]).count_ones() as u64,
            PointTable::QaryWords { words } => words[i]
                .iter()
                .zip(&words[j])
                .filter(|(a, b)| a != b)
                .count() as u64,
            PointTable::Subsets { w, supports } => {
                let a = &supports[i];
                let b = &supports[j];
                let mut inter = 0u64;
                let (mut x, mut y) = (0usize, 0usize);
                while x < a.len() && y < b.len() {
                    match a[x].cmp(&b[y]) {
                        std::cmp::Ordering::Less => x += 1,
                        std::cmp::Ordering::Greater => y += 1,
                        std::cmp::Ordering::Equal => {
                            inter += 1;
                            x += 1;
                            y += 1;
                        }
                    }
                }
                *w as u64 - inter
            }
        }
    }

    fn point(&self, i: usize) -> CodePoint {
        match self {
            PointTable::BinaryWords { n, words } => CodePoint::Word(
                (0..*n).map(|bit| ((words[i] >> bit) & 1) as u8).collect(),
            ),
            PointTable::QaryWords { words } => CodePoint::Word(words[i].clone()),
            PointTable::Subsets { supports, .. } => CodePoint::Set(supports[i].clone()),
        }
    }
}

fn enumerate_points(space: Space) -> PointTable {
    match space {
        Space::Hamming { n, q } if q == 2 => PointTable::BinaryWords {
            n,
            words: (0..1u64 << n).collect(),
        },
        Space::Hamming { n, q } => {
            let mut words = vec![vec![0u8; n as usize]];
            for pos in 0..n as usize {
                let mut extended = Vec::new();
                for word in &words {
                    for digit in 1..q as u8 {
                        let mut next = word.clone();
                        next[pos] = digit;
                        extended.push(next);
                    }
                }
                words.extend(extended);
            }
            words.sort();
            PointTable::QaryWords { words }
        }
        Space::Johnson { n, w } => {
            let mut supports = Vec::new();
            let mut current: Vec<u32> = (0..w).collect();
            loop {
                supports.push(current.clone());
                // next combination in lexicographic order
                let mut i = w as usize;
                loop {
                    if i == 0 {
                        return PointTable::Subsets { w, supports };
                    }
                    i -= 1;
                    if current[i] < n - (w - i as u32) {
                        current[i] += 1;
                        for j in i + 1..w as usize {
                            current[j] = current[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
        Space::Sphere { .. } => unreachable!("guarded by max_code"),
    }
}

/// Result of an exhaustive search: the exact maximum size and one code
/// achieving it.
#[derive(Clone, Debug)]
pub struct MaxCode {
    pub size: usize,
    pub points: Vec<CodePoint>,
}

/// Exact maximum size of a code in a finite space whose pairwise distances
/// all lie in the given set.
///
/// Refuses spaces with more than `limit` points (default 2^16) — clique
/// search is exponential and this oracle is meant for desk-scale validation.
pub fn max_code(ds: &DistanceSet, limit: Option<usize>) -> Result<MaxCode> {
    let space = ds.space();
    let limit = limit.unwrap_or(DEFAULT_VERTEX_LIMIT);
    let count = space
        .point_count()
        .ok_or_else(|| Error::Unsupported("the sphere is infinite; no brute-force oracle".into()))?;
    if count > BigInt::from(limit as u64) {
        return Err(Error::Budget(format!(
            "{space} has {count} points, above the limit of {limit}; \
             raise the limit only for deliberate long runs"
        )));
    }
    let allowed: Vec<u64> = ds.integer_values().expect("finite space distances");
    let points = enumerate_points(space);
    let v = points.len();

    let adjacent = |i: usize, j: usize| allowed.contains(&points.distance(i, j));

    // canonical base point: index 0 (zero word / first subset)
    let neighborhood: Vec<usize> = (1..v).filter(|&j| adjacent(0, j)).collect();

    let mut search = CliqueSearch {
        points: &points,
        allowed: &allowed,
        best: Vec::new(),
    };
    // order the neighborhood by degree within itself, densest first
    let mut cand = neighborhood;
    let mut degree = vec![0usize; v];
    for (a, &i) in cand.iter().enumerate() {
        for &j in &cand[a + 1..] {
            if adjacent(i, j) {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    cand.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    let mut current = Vec::new();
    search.extend(&cand, &mut current);

    let mut members = vec![0usize];
    members.extend_from_slice(&search.best);
    members.sort_unstable();
    Ok(MaxCode {
        size: members.len(),
        points: members.into_iter().map(|i| points.point(i)).collect(),
    })
}

struct CliqueSearch<'a> {
    points: &'a PointTable,
    allowed: &'a [u64],
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.allowed.contains(&self.points.distance(i, j))
    }

    /// Tomita-style branch and bound: candidates are greedily colored, the
    /// color index bounds the clique size reachable from each candidate, and
    /// branching runs from the highest color down.
    fn extend(&mut self, cand: &[usize], current: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return;
        }
        // greedy coloring; classes keep enumeration order
        let mut color_of = Vec::with_capacity(cand.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &vtx in cand {
            let slot = classes
                .iter()
                .position(|class| class.iter().all(|&u| !self.adjacent(u, vtx)));
            match slot {
                Some(k) => {
                    classes[k].push(vtx);
                    color_of.push(k + 1);
                }
                None => {
                    classes.push(vec![vtx]);
                    color_of.push(classes.len());
                }
            }
        }
        // sort candidates by color ascending, stable on the original order
        let mut order: Vec<usize> = (0..cand.len()).collect();
        order.sort_by_key(|&i| color_of[i]);
        let sorted: Vec<(usize, usize)> = order.iter().map(|&i| (cand[i], color_of[i])).collect();

        for idx in (0..sorted.len()).rev() {
            let (vtx, color) = sorted[idx];
            if current.len() + color <= self.best.len() {
                return; // colors ascend, nothing further can improve
            }
            let reduced: Vec<usize> = sorted[..idx]
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| self.adjacent(u, vtx))
                .collect();
            current.push(vtx);
            self.extend(&reduced, current);
            current.pop();
        }
    }
}
