use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Rational, Ring, TowerLevel, Q2};
use crate::linalg::Matrix;
use crate::space::{operator_q_gl, operator_q_osp, permutation_p, SpaceKind, SuperSpace};

/// Which rational R-matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RKind {
    /// `1 - P/u`.
    Yang,
    /// `1 - Q/u` with the general linear `Q`.
    YangPrime,
    /// `1 - P/u + Q/(u - kappa)`.
    Orthosymplectic,
}

/// `R(u) = 1 + alpha(u) P + beta(u) Q` on two copies of a graded space.
#[derive(Clone, Debug)]
pub struct RMatrix {
    space: SuperSpace,
    kind: RKind,
    kappa: Rational,
}

impl RMatrix {
    pub fn yang(space: &SuperSpace) -> Result<Self> {
        if space.is_osp() {
            return Err(space.wrong_kind("general linear"));
        }
        Ok(RMatrix { space: space.clone(), kind: RKind::Yang, kappa: Rational::ZERO })
    }

    pub fn yang_prime(space: &SuperSpace) -> Result<Self> {
        if space.is_osp() {
            return Err(space.wrong_kind("general linear"));
        }
        Ok(RMatrix { space: space.clone(), kind: RKind::YangPrime, kappa: Rational::ZERO })
    }

    /// The orthosymplectic R-matrix; `kappa` comes from the space kind.
    pub fn osp(space: &SuperSpace) -> Result<Self> {
        let kappa = space.kappa()?;
        Ok(RMatrix { space: space.clone(), kind: RKind::Orthosymplectic, kappa })
    }

    /// The natural R-matrix of a space: Yang for general linear kinds.
    pub fn for_space(space: &SuperSpace) -> Result<Self> {
        match space.kind() {
            SpaceKind::Gl { .. } => Self::yang(space),
            _ => Self::osp(space),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn kind(&self) -> RKind {
        self.kind
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    /// The two scalar coefficient functions: `R = 1 + a P + b Q`, where for
    /// `YangPrime` the `P` slot holds `Q`.
    fn coefficients<F: Field>(&self, x: &F) -> Result<(F, F)> {
        let a = x.inv()?.neg();
        match self.kind {
            RKind::Yang | RKind::YangPrime => Ok((a, F::zero())),
            RKind::Orthosymplectic => Ok((a, x.sub(&F::from_rational(&self.kappa)).inv()?)),
        }
    }

    fn p<R: Ring>(&self, d: usize, a: usize, b: usize) -> Result<Matrix<R>> {
        match self.kind {
            RKind::YangPrime => operator_q_gl(&self.space, d, a, b),
            _ => permutation_p(&self.space, d, a, b),
        }
    }

    /// `R_ab(x)` on the `d`-th tensor power, sites `a < b`.
    pub fn at_sites<F: Field>(&self, d: usize, a: usize, b: usize, x: &F) -> Result<Matrix<F>> {
        let (alpha, beta) = self.coefficients(x)?;
        let n = self.space.tensor_dim(d);
        let mut r = Matrix::identity(n).add(&self.p::<F>(d, a, b)?.scale(&alpha));
        if self.kind == RKind::Orthosymplectic {
            r = r.add(&operator_q_osp::<F>(&self.space, d, a, b)?.scale(&beta));
        }
        Ok(r)
    }

    /// `R(x)` on two copies.
    pub fn at<F: Field>(&self, x: &F) -> Result<Matrix<F>> {
        self.at_sites(2, 0, 1, x)
    }

    /// `R_12(u) R_13(u+v) R_23(v) - R_23(v) R_13(u+v) R_12(u)` over the
    /// two-variable field.
    pub fn ybe_residual(&self) -> Result<Matrix<Q2>> {
        let u = Q2::variable(0)?;
        let v = Q2::variable(1)?;
        let uv = u.add(&v);
        let r12 = self.at_sites(3, 0, 1, &u)?;
        let r13 = self.at_sites(3, 0, 2, &uv)?;
        let r23 = self.at_sites(3, 1, 2, &v)?;
        Ok(r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12)))
    }

    /// Exact Yang-Baxter check; on failure the error names one entry.
    pub fn check_ybe(&self) -> Result<()> {
        let res = self.ybe_residual()?;
        match res.first_nonzero() {
            None => Ok(()),
            Some((i, j, x)) => {
                Err(Error::VerificationFailure(format!("Yang-Baxter residual at ({i}, {j}) is {x}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q1;

    #[test]
    fn ybe_holds_small() {
        for s in [SuperSpace::gl(1, 1), SuperSpace::gl(2, 1), SuperSpace::osp(1), SuperSpace::osp_sub(1)] {
            RMatrix::for_space(&s).unwrap().check_ybe().unwrap();
        }
    }

    #[test]
    fn ybe_fails_for_wrong_kappa() {
        let s = SuperSpace::osp(1);
        let mut r = RMatrix::osp(&s).unwrap();
        r.kappa = Rational::from_int(1);
        assert!(r.check_ybe().is_err());
    }

    #[test]
    fn identity_at_infinity_and_unitarity() {
        // R(u) R(-u) = (1 - 1/u^2) for the Yang matrix
        let s = SuperSpace::gl(1, 2);
        let r = RMatrix::yang(&s).unwrap();
        let u = Q1::x();
        let prod = r.at(&u).unwrap().mul(&r.at(&u.neg()).unwrap());
        let c = Q1::one().sub(&u.mul(&u).inv().unwrap());
        assert_eq!(prod, Matrix::scalar(9, c));
    }
}
