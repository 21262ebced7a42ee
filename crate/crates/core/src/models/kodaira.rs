use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exact::MPoly;

use super::ModelError;

/// Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Gauss {
    re: BigRational,
    im: BigRational,
}

impl Gauss {
    fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }

    fn zero() -> Self {
        Gauss::new(BigRational::zero(), BigRational::zero())
    }

    fn add(&self, o: &Self) -> Self {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        Gauss::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    fn times_i(&self) -> Self {
        Gauss::new(-self.im.clone(), self.re.clone())
    }

    fn neg(&self) -> Self {
        Gauss::new(-self.re.clone(), -self.im.clone())
    }
}

/// `(w1, w2)·(z1, z2) = (w1 + z1, w2 + sign·i·f(w1)·g(z1) + z2)` where `f`, `g`
/// are the identity or complex conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KodairaVariant {
    pub plus: bool,
    pub conj_w: bool,
    pub conj_z: bool,
}

impl KodairaVariant {
    pub const PRINTED: KodairaVariant = KodairaVariant {
        plus: false,
        conj_w: true,
        conj_z: false,
    };

    pub fn all() -> Vec<KodairaVariant> {
        let mut v = Vec::new();
        for plus in [false, true] {
            for conj_w in [true, false] {
                for conj_z in [false, true] {
                    v.push(KodairaVariant { plus, conj_w, conj_z });
                }
            }
        }
        v
    }

    pub fn label(&self) -> String {
        let w = if self.conj_w { "conj(w1)" } else { "w1" };
        let z = if self.conj_z { "conj(z1)" } else { "z1" };
        format!("{}i*{}*{}", if self.plus { "+" } else { "-" }, w, z)
    }

    fn law(&self, w: &(Gauss, Gauss), z: &(Gauss, Gauss)) -> (Gauss, Gauss) {
        let f = if self.conj_w { w.0.conj() } else { w.0.clone() };
        let g = if self.conj_z { z.0.conj() } else { z.0.clone() };
        let mut cross = f.mul(&g).times_i();
        if !self.plus {
            cross = cross.neg();
        }
        (w.0.add(&z.0), w.1.add(&cross).add(&z.1))
    }
}

/// Point `((x, y, s), t)` of `N × R`, with `(x, y, s)(x', y', s') = (x + x', y + y', s + s' + x y')`.
type Point = [BigRational; 4];

fn n_mul(g: &Point, h: &Point) -> Point {
    [
        &g[0] + &h[0],
        &g[1] + &h[1],
        &g[2] + &h[2] + &g[0] * &h[1],
        &g[3] + &h[3],
    ]
}

/// `Φ((x, y, s), t) = (x + iy, (2s - xy) + i(2t + (x² + y²)/2))`
fn phi(g: &Point) -> (Gauss, Gauss) {
    let [x, y, s, t] = g;
    let two = BigRational::from_integer(2.into());
    let half = BigRational::new(1.into(), 2.into());
    (
        Gauss::new(x.clone(), y.clone()),
        Gauss::new(&two * s - x * y, &two * t + half * (x * x + y * y)),
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=10).into())
}

#[derive(Clone, Debug)]
pub struct KodairaLawReport {
    pub seed: u64,
    pub samples: usize,
    pub results: Vec<(KodairaVariant, bool)>,
    pub identity_ok: bool,
    /// Associativity of each passing law on random triples.
    pub associative: bool,
}

impl KodairaLawReport {
    pub fn passing(&self) -> Vec<KodairaVariant> {
        self.results.iter().filter(|(_, ok)| *ok).map(|(v, _)| *v).collect()
    }

    pub fn printed_passes(&self) -> bool {
        self.results.iter().any(|(v, ok)| *v == KodairaVariant::PRINTED && *ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "printed": KodairaVariant::PRINTED.label(),
            "printed_passes": self.printed_passes(),
            "variants": self.results.iter()
                .map(|(v, ok)| json!({"law": v.label(), "passes": ok}))
                .collect::<Vec<_>>(),
            "passing": self.passing().iter().map(|v| v.label()).collect::<Vec<_>>(),
            "identity_ok": self.identity_ok,
            "associative": self.associative,
        })
    }
}

/// Tests `Φ(g·h) = Φ(g)·Φ(h)` for all eight sign and conjugation variants of
/// the complex law on `samples` random rational pairs.
pub fn kodaira_group_law_check(seed: u64, samples: usize) -> KodairaLawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = |rng: &mut ChaCha8Rng| -> Point { std::array::from_fn(|_| random_rational(rng)) };
    let pairs: Vec<(Point, Point)> = (0..samples).map(|_| (point(&mut rng), point(&mut rng))).collect();
    let results: Vec<(KodairaVariant, bool)> = KodairaVariant::all()
        .into_iter()
        .map(|v| {
            let ok = pairs.iter().all(|(g, h)| phi(&n_mul(g, h)) == v.law(&phi(g), &phi(h)));
            (v, ok)
        })
        .collect();
    let zero: Point = std::array::from_fn(|_| BigRational::zero());
    let identity_ok = phi(&zero) == (Gauss::zero(), Gauss::zero());
    let triples: Vec<[(Gauss, Gauss); 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| phi(&point(&mut rng))))
        .collect();
    let associative = results.iter().filter(|(_, ok)| *ok).all(|(v, _)| {
        triples
            .iter()
            .all(|[a, b, c]| v.law(&v.law(a, b), c) == v.law(a, &v.law(b, c)))
    });
    KodairaLawReport {
        seed,
        samples,
        results,
        identity_ok,
        associative,
    }
}

const X: usize = 0;
const Y: usize = 1;
const W: usize = 2;
const X2: usize = 3;
const Y2: usize = 4;
const W2: usize = 5;
const A: usize = 6;
const B: usize = 7;

fn heis_mul(g: &[MPoly; 3], h: &[MPoly; 3]) -> [MPoly; 3] {
    [&g[0] + &h[0], &g[1] + &h[1], &(&g[2] + &h[2]) + &(&g[0] * &h[1])]
}

/// `ψ(x, y, w) = (ax - by, bx + ay, w + h(x, y))` with
/// `h = b(a x² - a y² - 2b x y)/2`.
fn psi(g: &[MPoly; 3], a: &MPoly, b: &MPoly) -> [MPoly; 3] {
    let (x, y) = (&g[0], &g[1]);
    let half = MPoly::constant(BigRational::new(1.into(), 2.into()));
    let h = &(&half * b) * &(&(&(a * &(x * x)) - &(a * &(y * y))) - &(&MPoly::from_int(2) * &(b * &(x * y))));
    [&(a * x) - &(b * y), &(b * x) + &(a * y), &g[2] + &h]
}

fn psi_defect(a: &MPoly, b: &MPoly) -> [MPoly; 3] {
    let g = [MPoly::var(X), MPoly::var(Y), MPoly::var(W)];
    let h = [MPoly::var(X2), MPoly::var(Y2), MPoly::var(W2)];
    let lhs = psi(&heis_mul(&g, &h), a, b);
    let rhs = heis_mul(&psi(&g, a, b), &psi(&h, a, b));
    std::array::from_fn(|i| &lhs[i] - &rhs[i])
}

/// `ψ(g·g') = ψ(g)·ψ(g')` as an identity in `x, y, w, x', y', w'` for the
/// rational point `(a, b)` on the unit circle. `n` labels the lattice `Λ_n`
/// and does not enter the identity.
pub fn secondary_kodaira_check(a: &BigRational, b: &BigRational, n: u32) -> Result<bool, ModelError> {
    if a * a + b * b != BigRational::one() {
        return Err(ModelError::InvalidPoint {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    if n == 0 {
        return Err(ModelError::InvalidParameter("n must be positive".into()));
    }
    let defect = psi_defect(&MPoly::constant(a.clone()), &MPoly::constant(b.clone()));
    Ok(defect.iter().all(Zero::is_zero))
}

/// The same identity with `a`, `b` symbolic, reduced modulo `a² + b² - 1`.
pub fn secondary_kodaira_symbolic() -> bool {
    psi_defect(&MPoly::var(A), &MPoly::var(B))
        .iter()
        .all(|p| p.reduce_circle(A, B).is_zero())
}

/// All `(p/h, q/h)` with `p² + q² = h²`, `1 ≤ h ≤ max_h`, in lowest terms.
pub fn pythagorean_points(max_h: i64) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    for h in 1..=max_h {
        for p in -h..=h {
            for q in -h..=h {
                if p * p + q * q != h * h {
                    continue;
                }
                let pt = (
                    BigRational::new(p.into(), h.into()),
                    BigRational::new(q.into(), h.into()),
                );
                if !out.contains(&pt) {
                    out.push(pt);
                }
            }
        }
    }
    out
}
