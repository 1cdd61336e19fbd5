use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::scalar::Scalar;

/// The irreducible sl2-module of highest weight `m` on `v_0..v_m`:
/// `h·v_j = (m−2j) v_j`, `f·v_j = v_{j+1}`, `e·v_j = j(m−j+1) v_{j−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Module<S> {
    pub weight: u32,
    pub e: Matrix<S>,
    pub h: Matrix<S>,
    pub f: Matrix<S>,
}

impl<S: Scalar> Sl2Module<S> {
    pub fn dim(&self) -> usize {
        self.weight as usize + 1
    }

    /// Action matrices in the sl2 basis order `(e, h, f)`.
    pub fn actions(&self) -> [&Matrix<S>; 3] {
        [&self.e, &self.h, &self.f]
    }

    /// Checks `ρ([x,y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` on the three basis pairs.
    pub fn verify(&self) -> Result<()> {
        check_sl2_relations(&self.e, &self.h, &self.f)
    }
}

pub(crate) fn check_sl2_relations<S: Scalar>(
    e: &Matrix<S>,
    h: &Matrix<S>,
    f: &Matrix<S>,
) -> Result<()> {
    let two = S::from_int(2);
    let checks = [
        ("[e,f] = h", e.commutator(f)?, h.clone()),
        ("[h,e] = 2e", h.commutator(e)?, e.scale(&two)),
        ("[h,f] = -2f", h.commutator(f)?, f.scale(&-two.clone())),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(Error::Verification(format!("module relation {name} fails")));
        }
    }
    Ok(())
}

pub fn build_sl2_module<S: Scalar>(m: u32) -> Sl2Module<S> {
    let d = m as usize + 1;
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mi = i64::from(m);
    for j in 0..d {
        let ji = j as i64;
        h.set(j, j, S::from_int(mi - 2 * ji));
        if j + 1 < d {
            f.set(j + 1, j, S::one());
        }
        if j > 0 {
            e.set(j - 1, j, S::from_int(ji * (mi - ji + 1)));
        }
    }
    Sl2Module { weight: m, e, h, f }
}

pub(crate) fn kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * br + k, j * bc + l, x.clone() * y);
                    }
                }
            }
        }
    }
    out
}
