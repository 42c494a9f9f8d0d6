use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A boundary circle, on the source or target side, labeled from 1.
/// Source circles order before target circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Src(u32),
    Dst(u32),
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary::Src(i) => write!(f, "s{i}"),
            Boundary::Dst(i) => write!(f, "d{i}"),
        }
    }
}

impl std::str::FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("boundary label {s:?} is not s<k> or d<k>"));
        let (side, num) = s.split_at_checked(1).ok_or_else(bad)?;
        let k: u32 = num.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match side {
            "s" => Ok(Boundary::Src(k)),
            "d" => Ok(Boundary::Dst(k)),
            _ => Err(bad()),
        }
    }
}

/// A connected component touching the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub boundary: Vec<Boundary>,
    pub genus: u32,
}

impl Block {
    fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary.len() as i64
    }
}

/// An oriented 2-cobordism class from `src` circles to `dst` circles:
/// a partition of the boundary into connected components with a genus
/// each, plus the genera of closed components.
///
/// Always kept canonical: every block sorted, blocks ordered by least
/// label, closed genera ascending. Equality of classes is equality of
/// this form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CobClass {
    src: usize,
    dst: usize,
    open: Vec<Block>,
    closed: Vec<u32>,
}

impl CobClass {
    /// Validates that `open` partitions the boundary exactly.
    pub fn new(src: usize, dst: usize, open: Vec<Block>, closed: Vec<u32>) -> Result<Self> {
        let mut seen_src = vec![false; src];
        let mut seen_dst = vec![false; dst];
        for b in &open {
            if b.boundary.is_empty() {
                return Err(Error::Invalid("empty boundary block; use a closed component".into()));
            }
            for &c in &b.boundary {
                let (slot, side) = match c {
                    Boundary::Src(i) => (seen_src.get_mut(i as usize - 1), "source"),
                    Boundary::Dst(i) => (seen_dst.get_mut(i as usize - 1), "target"),
                };
                match slot {
                    None => return Err(Error::Invalid(format!("{c} is not a {side} circle of a {src}->{dst} class"))),
                    Some(s) if *s => return Err(Error::Invalid(format!("{c} appears in two blocks"))),
                    Some(s) => *s = true,
                }
            }
        }
        if let Some(i) = seen_src.iter().position(|s| !s) {
            return Err(Error::Invalid(format!("s{} belongs to no block", i + 1)));
        }
        if let Some(j) = seen_dst.iter().position(|s| !s) {
            return Err(Error::Invalid(format!("d{} belongs to no block", j + 1)));
        }
        Ok(Self::canonical(src, dst, open, closed))
    }

    fn canonical(src: usize, dst: usize, mut open: Vec<Block>, mut closed: Vec<u32>) -> Self {
        for b in &mut open {
            b.boundary.sort();
        }
        open.sort();
        closed.sort();
        CobClass { src, dst, open, closed }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn open(&self) -> &[Block] {
        &self.open
    }

    pub fn closed(&self) -> &[u32] {
        &self.closed
    }

    /// Identity on `k` circles: one genus-0 tube per circle.
    pub fn cylinder(k: usize) -> Self {
        let open = (1..=k as u32)
            .map(|i| Block {
                boundary: vec![Boundary::Src(i), Boundary::Dst(i)],
                genus: 0,
            })
            .collect();
        CobClass {
            src: k,
            dst: k,
            open,
            closed: Vec::new(),
        }
    }

    /// The single genus-0 component on all of `X⊔Y`; the sphere when both
    /// are empty.
    pub fn connected_genus0(x: usize, y: usize) -> Self {
        if x == 0 && y == 0 {
            return Self::sphere();
        }
        let boundary = (1..=x as u32)
            .map(Boundary::Src)
            .chain((1..=y as u32).map(Boundary::Dst))
            .collect();
        CobClass {
            src: x,
            dst: y,
            open: vec![Block { boundary, genus: 0 }],
            closed: Vec::new(),
        }
    }

    pub fn sphere() -> Self {
        CobClass {
            src: 0,
            dst: 0,
            open: Vec::new(),
            closed: vec![0],
        }
    }

    /// `∅ → S¹` when `outgoing`, else `S¹ → ∅`.
    pub fn disk(outgoing: bool) -> Self {
        if outgoing {
            Self::connected_genus0(0, 1)
        } else {
            Self::connected_genus0(1, 0)
        }
    }

    /// `S¹ → S¹⊔S¹`.
    pub fn pants() -> Self {
        Self::connected_genus0(1, 2)
    }

    /// `S¹⊔S¹ → S¹`.
    pub fn copants() -> Self {
        Self::connected_genus0(2, 1)
    }

    /// The tube family `s_i ↦ d_{perm[i]}`, labels from 0 in `perm`.
    pub fn permutation(perm: &[usize]) -> Self {
        let open = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| Block {
                boundary: vec![Boundary::Src(i as u32 + 1), Boundary::Dst(j as u32 + 1)],
                genus: 0,
            })
            .collect();
        Self::canonical(perm.len(), perm.len(), open, Vec::new())
    }

    pub fn is_genus_zero(&self) -> bool {
        self.open.iter().all(|b| b.genus == 0) && self.closed.iter().all(|&g| g == 0)
    }

    /// A two-sided inverse exists exactly for tube families.
    pub fn inverse(&self) -> Option<Self> {
        if self.src != self.dst || !self.closed.is_empty() {
            return None;
        }
        let mut open = Vec::with_capacity(self.open.len());
        for b in &self.open {
            match b.boundary.as_slice() {
                [Boundary::Src(i), Boundary::Dst(j)] if b.genus == 0 => open.push(Block {
                    boundary: vec![Boundary::Src(*j), Boundary::Dst(*i)],
                    genus: 0,
                }),
                _ => return None,
            }
        }
        Some(Self::canonical(self.src, self.dst, open, Vec::new()))
    }

    /// `other ∘ self`: glue along the shared circles. Euler characteristic
    /// is additive (circles contribute 0), and each merged component has
    /// genus `(2 − χ − b)/2` where `b` counts its remaining boundary.
    pub fn glue(&self, other: &CobClass) -> Result<CobClass> {
        if self.dst != other.src {
            return Err(Error::NotComposable {
                f: self.to_string(),
                g: other.to_string(),
                f_target: format!("{} circles", self.dst),
                g_source: format!("{} circles", other.src),
            });
        }
        let n1 = self.open.len();
        let n = n1 + other.open.len();
        let mut uf = UnionFind::new(n);
        let mut first_side = vec![usize::MAX; self.dst];
        for (i, b) in self.open.iter().enumerate() {
            for c in &b.boundary {
                if let Boundary::Dst(k) = c {
                    first_side[*k as usize - 1] = i;
                }
            }
        }
        for (j, b) in other.open.iter().enumerate() {
            for c in &b.boundary {
                if let Boundary::Src(k) = c {
                    uf.union(first_side[*k as usize - 1], n1 + j);
                }
            }
        }

        let mut euler = vec![0i64; n];
        let mut boundary: Vec<Vec<Boundary>> = vec![Vec::new(); n];
        for (i, b) in self.open.iter().enumerate() {
            let r = uf.find(i);
            euler[r] += b.euler();
            boundary[r].extend(b.boundary.iter().filter(|c| matches!(c, Boundary::Src(_))));
        }
        for (j, b) in other.open.iter().enumerate() {
            let r = uf.find(n1 + j);
            euler[r] += b.euler();
            boundary[r].extend(b.boundary.iter().filter(|c| matches!(c, Boundary::Dst(_))));
        }

        let mut open = Vec::new();
        let mut closed: Vec<u32> = self.closed.iter().chain(&other.closed).copied().collect();
        for r in 0..n {
            if uf.find(r) != r {
                continue;
            }
            let b = boundary[r].len() as i64;
            let twice_genus = 2 - euler[r] - b;
            assert!(
                twice_genus >= 0 && twice_genus % 2 == 0,
                "gluing produced Euler characteristic {} with {b} boundary circles",
                euler[r]
            );
            let genus = (twice_genus / 2) as u32;
            if b == 0 {
                closed.push(genus);
            } else {
                open.push(Block {
                    boundary: std::mem::take(&mut boundary[r]),
                    genus,
                });
            }
        }
        Ok(Self::canonical(self.src, other.dst, open, closed))
    }

    /// Disjoint union; the second class's circles are numbered after the
    /// first's on each side.
    pub fn disjoint_union(&self, other: &CobClass) -> CobClass {
        let (ds, dd) = (self.src as u32, self.dst as u32);
        let shifted = other.open.iter().map(|b| Block {
            boundary: b
                .boundary
                .iter()
                .map(|c| match c {
                    Boundary::Src(i) => Boundary::Src(i + ds),
                    Boundary::Dst(j) => Boundary::Dst(j + dd),
                })
                .collect(),
            genus: b.genus,
        });
        let open = self.open.iter().cloned().chain(shifted).collect();
        let closed = self.closed.iter().chain(&other.closed).copied().collect();
        Self::canonical(self.src + other.src, self.dst + other.dst, open, closed)
    }
}

impl fmt::Display for CobClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.src, self.dst)?;
        for b in &self.open {
            let labels: Vec<String> = b.boundary.iter().map(Boundary::to_string).collect();
            write!(f, " [{} g{}]", labels.join(","), b.genus)?;
        }
        for g in &self.closed {
            write!(f, " (g{g})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CobClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFile {
    pub boundary: Vec<String>,
    pub genus: u32,
}

/// On-disk form of a [`CobClass`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobClassFile {
    pub src: usize,
    pub dst: usize,
    #[serde(default)]
    pub open: Vec<BlockFile>,
    #[serde(default)]
    pub closed: Vec<u32>,
}

/// Bound on circle counts accepted from files.
pub const MAX_CIRCLES: usize = 1 << 16;

impl CobClassFile {
    pub fn to_class(&self) -> Result<CobClass> {
        if self.src > MAX_CIRCLES || self.dst > MAX_CIRCLES {
            return Err(Error::SizeCap {
                what: "circle count".into(),
                needed: self.src.max(self.dst) as u128,
                cap: MAX_CIRCLES as u128,
            });
        }
        let open = self
            .open
            .iter()
            .map(|b| {
                Ok(Block {
                    boundary: b.boundary.iter().map(|s| s.parse()).collect::<Result<_>>()?,
                    genus: b.genus,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CobClass::new(self.src, self.dst, open, self.closed.clone())
    }

    pub fn from_class(c: &CobClass) -> Self {
        CobClassFile {
            src: c.src,
            dst: c.dst,
            open: c
                .open
                .iter()
                .map(|b| BlockFile {
                    boundary: b.boundary.iter().map(Boundary::to_string).collect(),
                    genus: b.genus,
                })
                .collect(),
            closed: c.closed.clone(),
        }
    }
}

pub fn parse_cob_class(text: &str) -> Result<CobClass> {
    let file: CobClassFile = serde_json::from_str(text)?;
    file.to_class()
}

/// Every class `src → dst` with block genera at most `genus_cap` and at
/// most `closed_cap` closed components, each of genus at most `genus_cap`.
pub fn enumerate_classes(src: usize, dst: usize, genus_cap: u32, closed_cap: usize) -> Vec<CobClass> {
    let labels: Vec<Boundary> = (1..=src as u32)
        .map(Boundary::Src)
        .chain((1..=dst as u32).map(Boundary::Dst))
        .collect();
    let mut closed_options: Vec<Vec<u32>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..closed_cap {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().copied().unwrap_or(0);
            for g in start..=genus_cap {
                let mut d = c.clone();
                d.push(g);
                next.push(d);
            }
        }
        closed_options.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for partition in set_partitions(&labels) {
        let k = partition.len();
        let choices = (genus_cap as usize + 1).pow(k as u32);
        for code in 0..choices {
            let mut rest = code;
            let open: Vec<Block> = partition
                .iter()
                .map(|b| {
                    let g = (rest % (genus_cap as usize + 1)) as u32;
                    rest /= genus_cap as usize + 1;
                    Block {
                        boundary: b.clone(),
                        genus: g,
                    }
                })
                .collect();
            for closed in &closed_options {
                out.push(CobClass::canonical(src, dst, open.clone(), closed.clone()));
            }
        }
    }
    out.sort();
    out
}

fn set_partitions<T: Clone>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let Some((first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first.clone());
            out.push(q);
        }
        let mut q = p;
        q.push(vec![first.clone()]);
        out.push(q);
    }
    out
}
