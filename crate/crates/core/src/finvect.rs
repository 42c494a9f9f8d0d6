//! Finite-dimensional real vector spaces with exact rational matrices.
//!
//! Objects are dimensions; `V⊗W` uses the row-major basis `e_i⊗f_j ↦
//! i·dim W + j`, so associators and unitors are identity matrices. Duals
//! share the index set of the primal space.

use serde::{Deserialize, Serialize};

use crate::category::{Category, Scope};
use crate::error::{Error, Result};
use crate::linalg::{parse_q, show_q, Matrix, Q};
use crate::monoidal::{Braiding, DualityData, Monoidal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectObj {
    pub dim: usize,
}

impl VectObj {
    pub fn new(dim: usize) -> Self {
        VectObj { dim }
    }
}

/// A linear map; `matrix` is `dst.dim × src.dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    src: VectObj,
    dst: VectObj,
    matrix: Matrix,
}

impl LinMap {
    pub fn new(src: VectObj, dst: VectObj, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != dst.dim || matrix.cols() != src.dim {
            return Err(Error::Shape(format!(
                "matrix is {}x{} but map is R^{} -> R^{}",
                matrix.rows(),
                matrix.cols(),
                src.dim,
                dst.dim
            )));
        }
        Ok(LinMap { src, dst, matrix })
    }

    /// Shape taken from the matrix.
    pub fn from_matrix(matrix: Matrix) -> Self {
        LinMap {
            src: VectObj::new(matrix.cols()),
            dst: VectObj::new(matrix.rows()),
            matrix,
        }
    }

    pub fn src(&self) -> VectObj {
        self.src
    }

    pub fn dst(&self) -> VectObj {
        self.dst
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix(Matrix::identity(dim))
    }

    pub fn scalar(x: Q) -> Self {
        Self::from_matrix(Matrix::scalar(x))
    }

    /// The single entry of an endomorphism of `ℝ`.
    pub fn as_scalar(&self) -> Option<&Q> {
        (self.src.dim == 1 && self.dst.dim == 1).then(|| self.matrix.get(0, 0))
    }
}

/// `V⊗V* → ℝ`, `Σ a_ij e_i⊗e_j* ↦ Σ a_ii`: a row with 1 at each `i·n+i`.
pub fn ev_map(n: usize) -> LinMap {
    LinMap::from_matrix(Matrix::from_fn(1, n * n, |_, k| diag_indicator(n, k)))
}

/// `ℝ → V⊗V*`, `1 ↦ Σ e_i⊗e_i*`.
pub fn coev_map(n: usize) -> LinMap {
    LinMap::from_matrix(Matrix::from_fn(n * n, 1, |k, _| diag_indicator(n, k)))
}

fn diag_indicator(n: usize, k: usize) -> Q {
    if k / n == k % n {
        crate::linalg::q(1)
    } else {
        crate::linalg::q(0)
    }
}

/// The permutation `e_i⊗f_j ↦ f_j⊗e_i` from `ℝ^m⊗ℝ^n` to `ℝ^n⊗ℝ^m`.
pub fn swap_map(m: usize, n: usize) -> LinMap {
    let mut p = Matrix::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            p.set(j * m + i, i * n + j, crate::linalg::q(1));
        }
    }
    LinMap::from_matrix(p)
}

/// Elementary matrices `E_ij: ℝ^a → ℝ^b` for every pair of dimensions.
pub fn basis_morphisms(dims: &[usize]) -> Vec<LinMap> {
    let mut out = Vec::new();
    for &a in dims {
        for &b in dims {
            for i in 0..b {
                for j in 0..a {
                    let mut m = Matrix::zeros(b, a);
                    m.set(i, j, crate::linalg::q(1));
                    out.push(LinMap::from_matrix(m));
                }
            }
        }
    }
    out
}

/// Objects of the given dimensions with their elementary morphisms.
pub fn scope(dims: &[usize]) -> Scope<FinVect> {
    Scope::new(dims.iter().map(|&d| VectObj::new(d)).collect(), basis_morphisms(dims))
}

/// The category of finite-dimensional real vector spaces, tensor `⊗_ℝ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FinVect;

impl FinVect {
    /// Duality data for `ℝ^n` with dual `ℝ^n`. The evaluation supplied on
    /// `V⊗V*` is moved to `V*⊗V` through the swap.
    pub fn duality(&self, n: usize) -> DualityData<FinVect> {
        let v = VectObj::new(n);
        DualityData::from_right_evaluation(self, &Swap, v, v, ev_map(n), coev_map(n))
            .expect("ev and coev are well typed")
    }
}

impl Category for FinVect {
    type Obj = VectObj;
    type Mor = LinMap;

    fn source(&self, f: &LinMap) -> VectObj {
        f.src
    }

    fn target(&self, f: &LinMap) -> VectObj {
        f.dst
    }

    fn identity(&self, x: &VectObj) -> Result<LinMap> {
        Ok(LinMap::identity(x.dim))
    }

    fn compose(&self, f: &LinMap, g: &LinMap) -> Result<LinMap> {
        if f.dst != g.src {
            return Err(Error::NotComposable {
                f: self.show_mor(f),
                g: self.show_mor(g),
                f_target: self.show_obj(&f.dst),
                g_source: self.show_obj(&g.src),
            });
        }
        Ok(LinMap {
            src: f.src,
            dst: g.dst,
            matrix: g.matrix.mul(&f.matrix)?,
        })
    }

    fn inverse(&self, f: &LinMap) -> Option<LinMap> {
        f.matrix.inverse().map(LinMap::from_matrix)
    }

    fn show_obj(&self, x: &VectObj) -> String {
        format!("R^{}", x.dim)
    }

    fn show_mor(&self, f: &LinMap) -> String {
        if f.matrix.rows() == 0 || f.matrix.cols() == 0 {
            format!("0: R^{} -> R^{}", f.src.dim, f.dst.dim)
        } else {
            f.matrix.to_string()
        }
    }
}

impl Monoidal for FinVect {
    fn unit(&self) -> VectObj {
        VectObj::new(1)
    }

    fn tensor_obj(&self, x: &VectObj, y: &VectObj) -> Result<VectObj> {
        Ok(VectObj::new(x.dim * y.dim))
    }

    fn tensor_mor(&self, f: &LinMap, g: &LinMap) -> Result<LinMap> {
        Ok(LinMap {
            src: VectObj::new(f.src.dim * g.src.dim),
            dst: VectObj::new(f.dst.dim * g.dst.dim),
            matrix: f.matrix.kron(&g.matrix),
        })
    }

    fn associator(&self, x: &VectObj, y: &VectObj, z: &VectObj) -> Result<LinMap> {
        Ok(LinMap::identity(x.dim * y.dim * z.dim))
    }

    fn left_unitor(&self, x: &VectObj) -> Result<LinMap> {
        Ok(LinMap::identity(x.dim))
    }

    fn right_unitor(&self, x: &VectObj) -> Result<LinMap> {
        Ok(LinMap::identity(x.dim))
    }
}

/// The symmetric braiding by [`swap_map`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Swap;

impl Braiding<FinVect> for Swap {
    fn component(&self, _: &FinVect, x: &VectObj, y: &VectObj) -> Result<LinMap> {
        Ok(swap_map(x.dim, y.dim))
    }

    fn is_symmetric(&self) -> bool {
        true
    }
}

/// On-disk form of a [`LinMap`]: rows of `"p/q"` strings. `src`/`dst` are
/// only needed when the matrix has no rows or no columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinMapFile {
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub src: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dst: Option<usize>,
}

impl LinMapFile {
    pub fn to_map(&self) -> Result<LinMap> {
        let rows = self.matrix.len();
        let cols = match (self.matrix.first(), self.src) {
            (Some(r), _) => r.len(),
            (None, Some(s)) => s,
            (None, None) => 0,
        };
        let entries = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let matrix = Matrix::from_rows(entries, cols)?;
        let src = VectObj::new(self.src.unwrap_or(cols));
        let dst = VectObj::new(self.dst.unwrap_or(rows));
        LinMap::new(src, dst, matrix)
    }

    pub fn from_map(f: &LinMap) -> Self {
        let degenerate = f.src.dim == 0 || f.dst.dim == 0;
        LinMapFile {
            matrix: f.matrix.row_vecs().iter().map(|r| r.iter().map(show_q).collect()).collect(),
            src: degenerate.then_some(f.src.dim),
            dst: degenerate.then_some(f.dst.dim),
        }
    }
}

pub fn parse_linmap(text: &str) -> Result<LinMap> {
    let file: LinMapFile = serde_json::from_str(text)?;
    file.to_map()
}

pub fn parse_vect_obj(text: &str) -> Result<VectObj> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::monoidal::{check_hexagon, check_pentagon_triangle, check_zigzag, trace};
    use crate::report::all_passed;

    fn m(rows: &[&[i64]]) -> LinMap {
        LinMap::from_matrix(Matrix::from_ints(rows))
    }

    #[test]
    fn ev_and_coev_entries() {
        assert_eq!(ev_map(2), m(&[&[1, 0, 0, 1]]));
        assert_eq!(coev_map(2), m(&[&[1], &[0], &[0], &[1]]));
        assert_eq!(coev_map(1), m(&[&[1]]));
        let e0 = ev_map(0);
        assert_eq!((e0.src().dim, e0.dst().dim), (0, 1));
        let c = FinVect.compose(&coev_map(5), &ev_map(5)).unwrap();
        assert_eq!(c.as_scalar(), Some(&q(5)));
    }

    #[test]
    fn swap_permutation_rows() {
        // rows (1,3,2,4) in one-based numbering
        assert_eq!(
            swap_map(2, 2),
            m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
        );
        assert_eq!(swap_map(1, 3), LinMap::identity(3));
    }

    #[test]
    fn tensor_of_scalar_scales() {
        let g = m(&[&[1, 2], &[3, 4]]);
        let t = FinVect.tensor_mor(&LinMap::scalar(q(3)), &g).unwrap();
        assert_eq!(t.matrix(), &g.matrix().scale(&q(3)));
    }

    #[test]
    fn coherence_small_dims() {
        let s = scope(&[1, 2]);
        assert!(all_passed(&check_pentagon_triangle(&FinVect, &s).unwrap()));
        assert!(all_passed(&check_hexagon(&FinVect, &Swap, &s).unwrap()));
    }

    #[test]
    fn zigzag_and_trace() {
        for n in 0..=4 {
            let d = FinVect.duality(n);
            assert!(all_passed(&check_zigzag(&FinVect, &d).unwrap()), "n = {n}");
            let tr = trace(&FinVect, &Swap, &d, &LinMap::identity(n)).unwrap();
            assert_eq!(tr.as_scalar(), Some(&q(n as i64)));
        }
        let d = FinVect.duality(3);
        let f = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]);
        assert_eq!(trace(&FinVect, &Swap, &d, &f).unwrap().as_scalar(), Some(&q(7)));
        let zero = LinMap::from_matrix(Matrix::zeros(3, 3));
        assert_eq!(trace(&FinVect, &Swap, &d, &zero).unwrap().as_scalar(), Some(&q(0)));
        assert!(matches!(
            trace(&FinVect, &Swap, &d, &LinMap::identity(2)),
            Err(Error::NotEndomorphism(_))
        ));
    }

    #[test]
    fn identity_braiding_is_not_natural() {
        struct IdBraid;
        impl Braiding<FinVect> for IdBraid {
            fn component(&self, _: &FinVect, x: &VectObj, y: &VectObj) -> Result<LinMap> {
                Ok(LinMap::identity(x.dim * y.dim))
            }
            fn is_symmetric(&self) -> bool {
                true
            }
        }
        let reports = check_hexagon(&FinVect, &IdBraid, &scope(&[2])).unwrap();
        let nat = reports.iter().find(|r| r.law == "braiding-naturality").unwrap();
        assert!(!nat.passed());
    }

    #[test]
    fn json_round_trip() {
        let f = m(&[&[1, 0], &[0, 2]]).matrix().scale(&crate::linalg::frac(1, 3));
        let f = LinMap::from_matrix(f);
        let text = serde_json::to_string(&LinMapFile::from_map(&f)).unwrap();
        assert_eq!(text, r#"{"matrix":[["1/3","0"],["0","2/3"]]}"#);
        assert_eq!(parse_linmap(&text).unwrap(), f);
        let empty = LinMap::new(VectObj::new(3), VectObj::new(0), Matrix::zeros(0, 3)).unwrap();
        let text = serde_json::to_string(&LinMapFile::from_map(&empty)).unwrap();
        assert_eq!(parse_linmap(&text).unwrap(), empty);
        assert!(parse_linmap(r#"{"matrix":[["1"],["1","2"]]}"#).is_err());
        assert_eq!(parse_vect_obj(r#"{"dim":4}"#).unwrap(), VectObj::new(4));
    }
}
