use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exact::{MPoly, Matrix};

use super::ModelError;

// coordinates x, y, z, cos(πt), sin(πt) and the lattice parameter n
const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const C: usize = 3;
const S: usize = 4;
const N: usize = 5;
const NAMES: [&str; 6] = ["x", "y", "z", "cos(pi t)", "sin(pi t)", "n"];

type Field = [MPoly; 4];

fn v(i: usize) -> MPoly {
    MPoly::var(i)
}

/// Components on `∂x, ∂y, ∂z, ∂t` of `X1`, `cos X2 + sin X3`, `-sin X2 + cos X3`,
/// `∂t`, where `X2 = ∂y + n x ∂z` and `X3 = ∂z`.
fn frame() -> [Field; 4] {
    let nx = &v(N) * &v(X);
    [
        [MPoly::one(), MPoly::zero(), MPoly::zero(), MPoly::zero()],
        [MPoly::zero(), v(C), &(&nx * &v(C)) + &v(S), MPoly::zero()],
        [MPoly::zero(), -v(S), &v(C) - &(&nx * &v(S)), MPoly::zero()],
        [MPoly::zero(), MPoly::zero(), MPoly::zero(), MPoly::one()],
    ]
}

/// Deck map `(x, y, z, t) ↦ (x, -y, -z, t + 1)` on coefficients.
fn deck(p: &MPoly) -> MPoly {
    let mut sub = vec![None; N + 1];
    sub[Y] = Some(-v(Y));
    sub[Z] = Some(-v(Z));
    sub[C] = Some(-v(C));
    sub[S] = Some(-v(S));
    p.substitute(&sub)
}

const JACOBIAN: [i64; 4] = [1, -1, -1, 1];

#[derive(Clone, Debug)]
pub struct FrameReport {
    pub determinant: String,
    pub determinant_is_one: bool,
    pub deck_invariant: bool,
    pub samples: usize,
    pub samples_ok: bool,
}

impl FrameReport {
    pub fn holds(&self) -> bool {
        self.determinant_is_one && self.deck_invariant && self.samples_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "determinant": self.determinant,
            "determinant_is_one": self.determinant_is_one,
            "deck_invariant": self.deck_invariant,
            "samples": self.samples,
            "samples_ok": self.samples_ok,
            "holds": self.holds(),
        })
    }
}

/// Checks that the frame has determinant 1 modulo `cos² + sin² = 1` and that
/// the deck map pushes each field at `p` to the same field at its image,
/// symbolically and at `samples` rational points.
pub fn example3_frame_check(seed: u64, samples: usize) -> Result<FrameReport, ModelError> {
    let f = frame();
    let m = Matrix::from_rows(f.iter().map(|r| r.to_vec()).collect())?;
    let det = m.det()?.reduce_circle(C, S);
    let pushed = |field: &Field| -> Field {
        std::array::from_fn(|i| field[i].scale(&BigRational::from_integer(JACOBIAN[i].into())))
    };
    let moved = |field: &Field| -> Field { std::array::from_fn(|i| deck(&field[i])) };
    let deck_invariant = f.iter().all(|field| pushed(field) == moved(field));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples_ok = true;
    for _ in 0..samples {
        let mut r = || BigRational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=9).into());
        let (x, y, z, u) = (r(), r(), r(), r());
        let one = BigRational::one();
        let den = &one + &u * &u;
        let cos = (&one - &u * &u) / &den;
        let sin = (BigRational::from_integer(2.into()) * &u) / &den;
        let n = BigRational::from_integer(rng.gen_range(1i64..=6).into());
        let p = [x.clone(), y.clone(), z.clone(), cos.clone(), sin.clone(), n.clone()];
        let image = [x, -y, -z, -cos, -sin, n];
        for field in &f {
            for i in 0..4 {
                let lhs = field[i].eval(&p) * BigRational::from_integer(JACOBIAN[i].into());
                if lhs != field[i].eval(&image) {
                    samples_ok = false;
                }
            }
        }
        let dm = Matrix::from_rows(f.iter().map(|r| r.iter().map(|c| c.eval(&p)).collect()).collect())?;
        samples_ok &= dm.det()? == BigRational::one();
    }

    Ok(FrameReport {
        determinant: det.to_string_with(&NAMES),
        determinant_is_one: det == MPoly::one(),
        deck_invariant,
        samples,
        samples_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_is_invariant_with_unit_determinant() {
        let r = example3_frame_check(3, 20).unwrap();
        assert!(r.determinant_is_one, "{}", r.determinant);
        assert!(r.deck_invariant && r.samples_ok);
        assert!(r.holds());
    }

    #[test]
    fn untwisted_frame_is_not_invariant() {
        // X2 itself flips sign under the deck map
        let x2: Field = [MPoly::zero(), MPoly::one(), &v(N) * &v(X), MPoly::zero()];
        let pushed: Field = std::array::from_fn(|i| x2[i].scale(&BigRational::from_integer(JACOBIAN[i].into())));
        let moved: Field = std::array::from_fn(|i| deck(&x2[i]));
        assert_ne!(pushed, moved);
    }
}
