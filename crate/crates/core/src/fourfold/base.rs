//! The base locus `B` of the net of conics `{Q_p ∩ P}` inside `P`.

use crate::algebra::{plane_common_zeros, AlgebraError, Ambient, Matrix, Monomial, ProjPoint, Scalar, Solutions};
use crate::detrep::SymDetRep;

use super::FourfoldError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseLocus {
    /// Points of `P ⊂ P^5`.
    pub points: Vec<ProjPoint>,
    pub complete: bool,
    /// The three generators `G(e_k)` are linearly dependent: the conics form
    /// a pencil (or less) rather than a net.
    pub net_degenerate: bool,
}

impl BaseLocus {
    pub(super) fn from_solutions(s: Solutions) -> BaseLocus {
        let points = s
            .points
            .into_iter()
            .map(|y| {
                let mut c = vec![y.field().zero(); 3];
                c.extend_from_slice(y.coords());
                ProjPoint::new(c, Ambient::P5).unwrap()
            })
            .collect();
        BaseLocus {
            points,
            complete: s.complete,
            net_degenerate: false,
        }
    }

    /// At most three points, and never three on a line.
    pub fn within_bound(&self) -> bool {
        match self.points.len() {
            0..=2 => true,
            3 => {
                let rows: Vec<Vec<Scalar>> = self.points.iter().map(|p| p.coords()[3..].to_vec()).collect();
                Matrix::from_rows(rows).rank() == 3
            }
            _ => false,
        }
    }
}

pub fn base_locus(rep: &SymDetRep) -> Result<BaseLocus, FourfoldError> {
    if rep.d_cubic().is_zero() {
        return Err(FourfoldError::DegenerateNet);
    }
    let conics = rep.net_conics();
    let monomials: Vec<Monomial> = (0..3)
        .flat_map(|i| (i..3).map(move |j| Monomial::var(i).mul(&Monomial::var(j))))
        .collect();
    let coeffs: Vec<Vec<Scalar>> = conics
        .iter()
        .map(|c| monomials.iter().map(|m| c.coefficient(m)).collect())
        .collect();
    let net_degenerate = Matrix::from_rows(coeffs).rank() < 3;
    let sols = plane_common_zeros(&conics).map_err(|e| match e {
        AlgebraError::PositiveDimensional(why) => FourfoldError::InfiniteBaseLocus(why),
        other => other.into(),
    })?;
    let mut b = BaseLocus::from_solutions(sols);
    b.net_degenerate = net_degenerate;
    Ok(b)
}
