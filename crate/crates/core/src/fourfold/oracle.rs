//! Exhaustive search for singular points of `X` over `F_q`.

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Ambient, Field, MultiPoly, ProjPoint, Scalar};
use crate::detrep::{DetRepError, SymDetRep};

/// Largest `q^5` the scan accepts.
pub const BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("q^5 = {0} exceeds the enumeration budget of {BUDGET}")]
    Budget(u128),
    #[error("representation does not reduce mod {q}: {source}")]
    Reduction { q: u32, source: DetRepError },
}

/// A cubic (or lower) form compiled for evaluation on `u64` residues.
struct Compiled {
    terms: Vec<(u64, [u8; 6])>,
}

impl Compiled {
    fn new(f: &MultiPoly) -> Compiled {
        let terms = f
            .terms()
            .map(|(m, c)| {
                let Scalar::Fp { value, .. } = c else { unreachable!("reduced mod q") };
                (*value as u64, m.0.map(|e| e as u8))
            })
            .collect();
        Compiled { terms }
    }

    fn eval(&self, pows: &[[u64; 4]; 6], q: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (c, e)| {
            let mut t = *c;
            for i in 0..6 {
                if e[i] > 0 {
                    t = t * pows[i][e[i] as usize] % q;
                }
            }
            (acc + t) % q
        })
    }
}

/// Every point of `P^5(F_q)` where `F` and its six partials vanish, sorted.
pub fn brute_force_oracle(rep: &SymDetRep, q: u64) -> Result<Vec<ProjPoint>, OracleError> {
    let field = Field::prime(q).map_err(|_| OracleError::NotPrime(q))?;
    if (q as u128).pow(5) > BUDGET as u128 {
        return Err(OracleError::Budget((q as u128).pow(5)));
    }
    let rep = rep.reduce(field).map_err(|source| OracleError::Reduction { q: q as u32, source })?;
    let f = rep.fourfold();
    let eqs: Vec<Compiled> = std::iter::once(&f)
        .chain(f.gradient().iter())
        .map(Compiled::new)
        .collect::<Vec<_>>();
    let mut found: Vec<[u64; 6]> = (0..6usize)
        .flat_map(|lead| {
            let free = 5 - lead;
            let count = q.pow(free as u32);
            let eqs = &eqs;
            (0..count)
                .into_par_iter()
                .filter_map(move |mut idx| {
                    let mut x = [0u64; 6];
                    x[lead] = 1;
                    for slot in x.iter_mut().skip(lead + 1) {
                        *slot = idx % q;
                        idx /= q;
                    }
                    let mut pows = [[1u64; 4]; 6];
                    for i in 0..6 {
                        for e in 1..4 {
                            pows[i][e] = pows[i][e - 1] * x[i] % q;
                        }
                    }
                    eqs.iter().all(|e| e.eval(&pows, q) == 0).then_some(x)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort();
    let mut points: Vec<ProjPoint> = found
        .into_iter()
        .map(|x| ProjPoint::new(x.iter().map(|&v| field.from_i64(v as i64)).collect(), Ambient::P5).unwrap())
        .collect();
    points.sort();
    Ok(points)
}
