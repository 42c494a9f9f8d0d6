use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{parse_q, show_q, Matrix, Q};

/// `LV` truncated at trigonometric degree `modes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopSpaceObj {
    pub dim: usize,
    pub modes: usize,
}

impl LoopSpaceObj {
    pub fn new(dim: usize, modes: usize) -> Self {
        LoopSpaceObj { dim, modes }
    }

    /// Real dimension of the coefficient space, `dim·(2·modes+1)`.
    pub fn coefficient_dim(&self) -> usize {
        self.dim * (2 * self.modes + 1)
    }
}

impl fmt::Display for LoopSpaceObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LR^{}", self.dim)
    }
}

/// A trigonometric polynomial `a₀ + Σ aₖ cos(kt) + Σ bₖ sin(kt)` with
/// coefficients in `ℝ^dim`.
///
/// `terms[0]` is `a₀`, `terms[k]` is `aₖ` and `terms[modes + k]` is `bₖ`;
/// each term is a vector of length `dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Loop {
    object: LoopSpaceObj,
    terms: Vec<Vec<Q>>,
}

/// Which trigonometric term a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Constant,
    Cos(usize),
    Sin(usize),
}

impl Loop {
    pub fn zero(object: LoopSpaceObj) -> Self {
        Loop {
            object,
            terms: vec![vec![Q::zero(); object.dim]; 2 * object.modes + 1],
        }
    }

    pub fn object(&self) -> LoopSpaceObj {
        self.object
    }

    fn slot(&self, mode: Mode) -> Result<usize> {
        let n = self.object.modes;
        match mode {
            Mode::Constant => Ok(0),
            Mode::Cos(k) if (1..=n).contains(&k) => Ok(k),
            Mode::Sin(k) if (1..=n).contains(&k) => Ok(n + k),
            _ => Err(Error::Config(format!("{mode:?} exceeds the mode cap {n}"))),
        }
    }

    pub fn term(&self, mode: Mode) -> Result<&[Q]> {
        Ok(&self.terms[self.slot(mode)?])
    }

    /// Adds `v` times the given trigonometric term.
    pub fn with_term(mut self, mode: Mode, v: &[Q]) -> Result<Self> {
        if v.len() != self.object.dim {
            return Err(Error::Shape(format!("vector of length {} in {}", v.len(), self.object)));
        }
        let s = self.slot(mode)?;
        for (a, b) in self.terms[s].iter_mut().zip(v) {
            *a += b;
        }
        Ok(self)
    }

    /// The constant loop at `v`.
    pub fn constant(modes: usize, v: Vec<Q>) -> Self {
        let object = LoopSpaceObj::new(v.len(), modes);
        let mut out = Loop::zero(object);
        out.terms[0] = v;
        out
    }

    /// A scalar loop in `Lℝ` from `(mode, coefficient)` pairs.
    pub fn scalar(modes: usize, terms: &[(Mode, Q)]) -> Result<Self> {
        let mut out = Loop::zero(LoopSpaceObj::new(1, modes));
        for (m, c) in terms {
            out = out.with_term(*m, std::slice::from_ref(c))?;
        }
        Ok(out)
    }

    pub fn is_constant(&self) -> bool {
        self.terms[1..].iter().all(|t| t.iter().all(Q::is_zero))
    }

    pub fn scale(&self, c: &Q) -> Loop {
        Loop {
            object: self.object,
            terms: self.terms.iter().map(|t| t.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn add(&self, other: &Loop) -> Result<Loop> {
        if self.object != other.object {
            return Err(Error::Shape(format!("adding loops in {} and {}", self.object, other.object)));
        }
        Ok(Loop {
            object: self.object,
            terms: self
                .terms
                .iter()
                .zip(&other.terms)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    /// `t ↦ T(γ(t))`, computed term by term.
    pub fn apply(&self, t: &Matrix) -> Result<Loop> {
        if t.cols() != self.object.dim {
            return Err(Error::Shape(format!(
                "map with {} columns applied to a loop in {}",
                t.cols(),
                self.object
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|v| {
                (0..t.rows())
                    .map(|i| (0..t.cols()).fold(Q::zero(), |acc, j| acc + t.get(i, j) * &v[j]))
                    .collect()
            })
            .collect();
        Ok(Loop {
            object: LoopSpaceObj::new(t.rows(), self.object.modes),
            terms,
        })
    }

    /// The pointwise tensor `t ↦ γ₁(t)⊗γ₂(t)` in `L(V₁⊗V₂)`. Products of
    /// trigonometric terms raise the degree, so this fails when the result
    /// has a nonzero term beyond the mode cap.
    pub fn pointwise_tensor(&self, other: &Loop) -> Result<Loop> {
        let n = self.object.modes;
        if other.object.modes != n {
            return Err(Error::Config(format!(
                "mode caps {} and {} differ",
                n, other.object.modes
            )));
        }
        let (d1, d2) = (self.object.dim, other.object.dim);
        let wide = 2 * n;
        // cosine and sine coefficients up to degree 2n, per output coordinate
        let mut cos = vec![vec![Q::zero(); d1 * d2]; wide + 1];
        let mut sin = vec![vec![Q::zero(); d1 * d2]; wide + 1];
        let half = Q::new(1.into(), 2.into());
        let split = |l: &Loop, k: usize| -> (Vec<Q>, Vec<Q>) {
            if k == 0 {
                (l.terms[0].clone(), vec![Q::zero(); l.object.dim])
            } else {
                (l.terms[k].clone(), l.terms[n + k].clone())
            }
        };
        for j in 0..=n {
            let (ca, sa) = split(self, j);
            for k in 0..=n {
                let (cb, sb) = split(other, k);
                let (sum, diff) = (j + k, j.abs_diff(k));
                // sign of sin((j-k)t) relative to sin(|j-k|t)
                let sgn = if j >= k { Q::from_integer(1.into()) } else { Q::from_integer((-1).into()) };
                for p in 0..d1 {
                    for q in 0..d2 {
                        let o = p * d2 + q;
                        let cc = &ca[p] * &cb[q];
                        let ss = &sa[p] * &sb[q];
                        let sc = &sa[p] * &cb[q];
                        let cs = &ca[p] * &sb[q];
                        // cos j cos k = (cos(j-k) + cos(j+k))/2
                        // sin j sin k = (cos(j-k) - cos(j+k))/2
                        // sin j cos k = (sin(j+k) + sin(j-k))/2
                        // cos j sin k = (sin(j+k) - sin(j-k))/2
                        cos[diff][o] += (&cc + &ss) * &half;
                        cos[sum][o] += (&cc - &ss) * &half;
                        sin[sum][o] += (&sc + &cs) * &half;
                        sin[diff][o] += (&sc - &cs) * &half * &sgn;
                    }
                }
            }
        }
        for k in n + 1..=wide {
            if cos[k].iter().chain(&sin[k]).any(|x| !x.is_zero()) {
                return Err(Error::Config(format!(
                    "pointwise tensor has degree {k}, beyond the mode cap {n}"
                )));
            }
        }
        let mut terms = Vec::with_capacity(2 * n + 1);
        terms.extend(cos.into_iter().take(n + 1));
        terms.extend(sin.into_iter().skip(1).take(n));
        Ok(Loop {
            object: LoopSpaceObj::new(d1 * d2, n),
            terms,
        })
    }

    /// Floating-point evaluation at `t`, for display only.
    pub fn eval_f64(&self, t: f64) -> Vec<f64> {
        let n = self.object.modes;
        let f = |x: &Q| x.to_f64().unwrap_or(f64::NAN);
        (0..self.object.dim)
            .map(|i| {
                let mut acc = f(&self.terms[0][i]);
                for k in 1..=n {
                    acc += f(&self.terms[k][i]) * (k as f64 * t).cos();
                    acc += f(&self.terms[n + k][i]) * (k as f64 * t).sin();
                }
                acc
            })
            .collect()
    }

    /// Floating-point comparison of values at `samples` equally spaced
    /// points, within `tol`. Never used by exact checks.
    pub fn approx_eq(&self, other: &Loop, samples: usize, tol: f64) -> bool {
        self.object == other.object
            && (0..samples).all(|s| {
                let t = std::f64::consts::TAU * s as f64 / samples as f64;
                self.eval_f64(t)
                    .iter()
                    .zip(other.eval_f64(t))
                    .all(|(a, b)| (a - b).abs() <= tol)
            })
    }
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.object.modes;
        let mut parts = Vec::new();
        let vec = |v: &[Q]| -> String {
            if v.len() == 1 {
                show_q(&v[0])
            } else {
                let s: Vec<String> = v.iter().map(show_q).collect();
                format!("({})", s.join(","))
            }
        };
        for (s, t) in self.terms.iter().enumerate() {
            if t.iter().all(Q::is_zero) {
                continue;
            }
            let basis = match s {
                0 => String::new(),
                k if k <= n => format!("·cos({k}t)"),
                k => format!("·sin({}t)", k - n),
            };
            parts.push(format!("{}{basis}", vec(t)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.object)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffFile {
    pub a0: Vec<String>,
    #[serde(default)]
    pub cos: Vec<Vec<String>>,
    #[serde(default)]
    pub sin: Vec<Vec<String>>,
}

/// On-disk form of a [`Loop`]: `cos[k-1]` and `sin[k-1]` hold the
/// coefficient vectors of `cos(kt)` and `sin(kt)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopFile {
    pub dim: usize,
    pub modes: usize,
    pub coeffs: CoeffFile,
}

/// Bound on `dim·(2·modes+1)` accepted from files.
pub const MAX_COEFFICIENTS: usize = 1 << 20;

impl LoopFile {
    pub fn to_loop(&self) -> Result<Loop> {
        let object = LoopSpaceObj::new(self.dim, self.modes);
        let needed = (self.dim as u128) * (2 * self.modes as u128 + 1);
        if needed > MAX_COEFFICIENTS as u128 {
            return Err(Error::SizeCap {
                what: "loop coefficients".into(),
                needed,
                cap: MAX_COEFFICIENTS as u128,
            });
        }
        let row = |v: &[String], what: &str| -> Result<Vec<Q>> {
            if v.len() != self.dim {
                return Err(Error::Shape(format!("{what} has {} entries, dim is {}", v.len(), self.dim)));
            }
            v.iter().map(|s| parse_q(s)).collect()
        };
        let c = &self.coeffs;
        if c.cos.len() != self.modes || c.sin.len() != self.modes {
            return Err(Error::Shape(format!(
                "{} cos and {} sin rows for {} modes",
                c.cos.len(),
                c.sin.len(),
                self.modes
            )));
        }
        let mut terms = vec![row(&c.a0, "a0")?];
        for (k, r) in c.cos.iter().enumerate() {
            terms.push(row(r, &format!("cos row {}", k + 1))?);
        }
        for (k, r) in c.sin.iter().enumerate() {
            terms.push(row(r, &format!("sin row {}", k + 1))?);
        }
        Ok(Loop { object, terms })
    }

    pub fn from_loop(l: &Loop) -> Self {
        let n = l.object.modes;
        let show = |v: &Vec<Q>| v.iter().map(show_q).collect();
        LoopFile {
            dim: l.object.dim,
            modes: n,
            coeffs: CoeffFile {
                a0: show(&l.terms[0]),
                cos: l.terms[1..=n].iter().map(show).collect(),
                sin: l.terms[n + 1..].iter().map(show).collect(),
            },
        }
    }
}

pub fn parse_loop(text: &str) -> Result<Loop> {
    let file: LoopFile = serde_json::from_str(text)?;
    file.to_loop()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, q};

    #[test]
    fn terms_respect_the_mode_cap() {
        let g = Loop::scalar(1, &[(Mode::Cos(1), q(2))]).unwrap();
        assert_eq!(g.to_string(), "2·cos(1t)");
        assert!(Loop::scalar(1, &[(Mode::Sin(2), q(1))]).is_err());
        assert!(Loop::scalar(0, &[(Mode::Constant, q(1))]).unwrap().is_constant());
    }

    #[test]
    fn pointwise_tensor_uses_product_formulas() {
        let c = Loop::scalar(2, &[(Mode::Cos(1), q(1))]).unwrap();
        let s = Loop::scalar(2, &[(Mode::Sin(1), q(1))]).unwrap();
        // cos² = 1/2 + cos 2t / 2
        let cc = c.pointwise_tensor(&c).unwrap();
        assert_eq!(cc, Loop::scalar(2, &[(Mode::Constant, frac(1, 2)), (Mode::Cos(2), frac(1, 2))]).unwrap());
        // sin·cos = sin 2t / 2
        assert_eq!(s.pointwise_tensor(&c).unwrap(), Loop::scalar(2, &[(Mode::Sin(2), frac(1, 2))]).unwrap());
        assert_eq!(c.pointwise_tensor(&s).unwrap(), s.pointwise_tensor(&c).unwrap());
        // cos 2t · sin t = (sin 3t - sin t)/2 is out of range at cap 2
        let c2 = Loop::scalar(2, &[(Mode::Cos(2), q(1))]).unwrap();
        assert!(c2.pointwise_tensor(&s).is_err());
        let c1 = Loop::scalar(3, &[(Mode::Cos(2), q(1))]).unwrap();
        let s1 = Loop::scalar(3, &[(Mode::Sin(1), q(1))]).unwrap();
        assert_eq!(
            c1.pointwise_tensor(&s1).unwrap(),
            Loop::scalar(3, &[(Mode::Sin(3), frac(1, 2)), (Mode::Sin(1), frac(-1, 2))]).unwrap()
        );
    }

    #[test]
    fn json_round_trip_and_shape_errors() {
        let g = Loop::constant(1, vec![q(1), frac(-2, 3)])
            .with_term(Mode::Sin(1), &[q(0), q(5)])
            .unwrap();
        let text = serde_json::to_string(&LoopFile::from_loop(&g)).unwrap();
        assert_eq!(
            text,
            r#"{"dim":2,"modes":1,"coeffs":{"a0":["1","-2/3"],"cos":[["0","0"]],"sin":[["0","5"]]}}"#
        );
        assert_eq!(parse_loop(&text).unwrap(), g);
        assert!(parse_loop(r#"{"dim":2,"modes":0,"coeffs":{"a0":["1"]}}"#).is_err());
        assert!(parse_loop(r#"{"dim":1,"modes":1,"coeffs":{"a0":["1"]}}"#).is_err());
        assert!(parse_loop(r#"{"dim":1,"modes":0,"coeffs":{"a0":["1/0"]}}"#).is_err());
        assert!(matches!(
            parse_loop(r#"{"dim":4294967296,"modes":4294967296,"coeffs":{"a0":[]}}"#),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn float_view_agrees_with_terms() {
        let g = Loop::scalar(3, &[(Mode::Cos(1), q(1)), (Mode::Sin(3), q(2))]).unwrap();
        let v = g.eval_f64(0.5)[0];
        assert!((v - (0.5f64.cos() + 2.0 * 1.5f64.sin())).abs() < 1e-12);
        assert!(g.approx_eq(&g.scale(&q(1)), 9, 1e-9));
        assert!(!g.approx_eq(&g.scale(&q(2)), 9, 1e-9));
    }
}
