//! Reference computations shared by the integration tests, and a
//! deliberately broken carrier for mutation tests. The oracles do not call
//! the code paths they are used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use moncat::category::Category;
use moncat::cob::{Boundary, CobClass};
use moncat::finvect::{swap_map, FinVect, LinMap, VectObj};
use moncat::linalg::{q, Matrix, Q};
use moncat::loopspace::{Loop, Mode};
use moncat::monoidal::Monoidal;
use moncat::Result;
use num_traits::{One, Zero};

/// `(cos t, sin t)` for `tan(t/2) = u`; every such angle has rational
/// sine and cosine.
pub fn angle(u: &Q) -> (Q, Q) {
    let d = Q::one() + u * u;
    ((Q::one() - u * u) / &d, (u + u) / d)
}

/// `γ(t)` at `tan(t/2) = u`, using `cos kt + i sin kt = (cos t + i sin t)^k`.
pub fn eval_loop(g: &Loop, u: &Q) -> Vec<Q> {
    let (c, s) = angle(u);
    let obj = g.object();
    let mut out: Vec<Q> = g.term(Mode::Constant).unwrap().to_vec();
    let (mut ck, mut sk) = (Q::one(), Q::zero());
    for k in 1..=obj.modes {
        let next_c = &ck * &c - &sk * &s;
        let next_s = &sk * &c + &ck * &s;
        ck = next_c;
        sk = next_s;
        let a = g.term(Mode::Cos(k)).unwrap();
        let b = g.term(Mode::Sin(k)).unwrap();
        for i in 0..obj.dim {
            out[i] += &a[i] * &ck + &b[i] * &sk;
        }
    }
    out
}

/// `2N+1` distinct angles in `[0, 2π)`; a trigonometric polynomial of
/// degree `N` vanishing at all of them is zero.
pub fn sample_points(modes: usize) -> Vec<Q> {
    (0..=2 * modes as i64).map(q).collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn rows(m: &Matrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn diag_sum(m: &[Vec<Q>]) -> Q {
    (0..m.len()).fold(Q::zero(), |acc, i| acc + &m[i][i])
}

/// `(A⊗B)[i·p + k][j·q + l] = A[i][j]·B[k][l]`.
pub fn kron(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let (p, qc) = (b.len(), b.first().map_or(0, Vec::len));
    let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = vec![vec![Q::zero(); n * qc]; m * p];
    for i in 0..m {
        for j in 0..n {
            for k in 0..p {
                for l in 0..qc {
                    out[i * p + k][j * qc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().enumerate().fold(Q::zero(), |acc, (k, x)| acc + x * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Euler characteristic of the surface a class stands for.
pub fn euler(c: &CobClass) -> i64 {
    let open: i64 = c.open().iter().map(|b| 2 - 2 * b.genus as i64 - b.boundary.len() as i64).sum();
    let closed: i64 = c.closed().iter().map(|&g| 2 - 2 * g as i64).sum();
    open + closed
}

/// Connected components after gluing `f` then `g`, by graph search over
/// blocks with an edge per shared circle.
pub fn glued_components(f: &CobClass, g: &CobClass) -> usize {
    let n1 = f.open().len();
    let n = n1 + g.open().len();
    let mut adj = vec![Vec::new(); n];
    for (i, a) in f.open().iter().enumerate() {
        for (j, b) in g.open().iter().enumerate() {
            let shared = a.boundary.iter().any(|x| match x {
                Boundary::Dst(k) => b.boundary.contains(&Boundary::Src(*k)),
                Boundary::Src(_) => false,
            });
            if shared {
                adj[i].push(n1 + j);
                adj[n1 + j].push(i);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count + f.closed().len() + g.closed().len()
}

/// Boundary labels of a class, as strings.
pub fn boundary_labels(c: &CobClass) -> BTreeSet<String> {
    c.open().iter().flat_map(|b| b.boundary.iter().map(|x| x.to_string())).collect()
}

/// FinVect with one associator component or one tensor of morphisms
/// replaced.
pub struct Corrupted {
    pub associator_at: Option<(usize, usize, usize)>,
    pub tensor_at: Option<(LinMap, LinMap)>,
}

impl Category for Corrupted {
    type Obj = VectObj;
    type Mor = LinMap;
    fn source(&self, f: &LinMap) -> VectObj {
        FinVect.source(f)
    }
    fn target(&self, f: &LinMap) -> VectObj {
        FinVect.target(f)
    }
    fn identity(&self, x: &VectObj) -> Result<LinMap> {
        FinVect.identity(x)
    }
    fn compose(&self, f: &LinMap, g: &LinMap) -> Result<LinMap> {
        FinVect.compose(f, g)
    }
    fn inverse(&self, f: &LinMap) -> Option<LinMap> {
        FinVect.inverse(f)
    }
    fn show_obj(&self, x: &VectObj) -> String {
        FinVect.show_obj(x)
    }
    fn show_mor(&self, f: &LinMap) -> String {
        FinVect.show_mor(f)
    }
}

impl Monoidal for Corrupted {
    fn unit(&self) -> VectObj {
        FinVect.unit()
    }
    fn tensor_obj(&self, x: &VectObj, y: &VectObj) -> Result<VectObj> {
        FinVect.tensor_obj(x, y)
    }
    fn tensor_mor(&self, f: &LinMap, g: &LinMap) -> Result<LinMap> {
        let t = FinVect.tensor_mor(f, g)?;
        match &self.tensor_at {
            Some((a, b)) if a == f && b == g => Ok(LinMap::from_matrix(t.matrix().scale(&q(2)))),
            _ => Ok(t),
        }
    }
    fn associator(&self, x: &VectObj, y: &VectObj, z: &VectObj) -> Result<LinMap> {
        if self.associator_at == Some((x.dim, y.dim, z.dim)) {
            let n = x.dim * y.dim * z.dim;
            return Ok(swap_map(2, n / 2));
        }
        FinVect.associator(x, y, z)
    }
    fn left_unitor(&self, x: &VectObj) -> Result<LinMap> {
        FinVect.left_unitor(x)
    }
    fn right_unitor(&self, x: &VectObj) -> Result<LinMap> {
        FinVect.right_unitor(x)
    }
}
