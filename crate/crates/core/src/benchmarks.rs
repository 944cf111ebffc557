//! Deterministic continuous test functions spanning five problem groups:
//! separable, low/moderate conditioning, unimodal high conditioning,
//! multimodal with adequate global structure, and multimodal with weak
//! global structure. Two functions per group, each materialised per
//! instance seed with a deterministic shift, optional rotation, and
//! fitness offset.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::{derive_seed, rng_from_seed};

/// Number of functions in the suite.
pub const SUITE_SIZE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BaseFunction {
    Sphere,
    SeparableEllipsoid,
    AttractiveSector,
    Rosenbrock,
    Discus,
    BentCigar,
    Rastrigin,
    Schwefel,
    Katsuura,
}

struct CatalogEntry {
    id: u32,
    name: &'static str,
    group: u8,
    rotated: bool,
    base: BaseFunction,
}

const CATALOG: [CatalogEntry; SUITE_SIZE] = [
    CatalogEntry { id: 1, name: "sphere", group: 1, rotated: false, base: BaseFunction::Sphere },
    CatalogEntry { id: 2, name: "ellipsoid_separable", group: 1, rotated: false, base: BaseFunction::SeparableEllipsoid },
    CatalogEntry { id: 3, name: "attractive_sector", group: 2, rotated: true, base: BaseFunction::AttractiveSector },
    CatalogEntry { id: 4, name: "rosenbrock", group: 2, rotated: false, base: BaseFunction::Rosenbrock },
    CatalogEntry { id: 5, name: "discus", group: 3, rotated: true, base: BaseFunction::Discus },
    CatalogEntry { id: 6, name: "bent_cigar", group: 3, rotated: true, base: BaseFunction::BentCigar },
    CatalogEntry { id: 7, name: "rastrigin_separable", group: 4, rotated: false, base: BaseFunction::Rastrigin },
    CatalogEntry { id: 8, name: "rastrigin_rotated", group: 4, rotated: true, base: BaseFunction::Rastrigin },
    CatalogEntry { id: 9, name: "schwefel", group: 5, rotated: false, base: BaseFunction::Schwefel },
    CatalogEntry { id: 10, name: "katsuura", group: 5, rotated: true, base: BaseFunction::Katsuura },
];

/// A materialised benchmark function instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveFunction {
    id: u32,
    name: &'static str,
    group: u8,
    dimension: usize,
    instance: u32,
    shift: Vec<f64>,
    rotation: Option<Vec<Vec<f64>>>,
    f_opt: f64,
    base: BaseFunction,
}

impl ObjectiveFunction {
    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Problem group label in 1..=5, the classification target.
    pub fn group(&self) -> u8 {
        self.group
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn instance(&self) -> u32 {
        self.instance
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<f64>>> {
        self.rotation.as_ref()
    }

    pub fn f_opt(&self) -> f64 {
        self.f_opt
    }

    /// The catalogue function with identity transforms (zero shift, no
    /// rotation, zero offset), mainly useful for testing base behaviour.
    pub fn unshifted(id: u32, dimension: usize) -> Result<Self> {
        let entry = CATALOG
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::Domain(format!("unknown function id {id}")))?;
        check_dimension(dimension)?;
        Ok(ObjectiveFunction {
            id: entry.id,
            name: entry.name,
            group: entry.group,
            dimension,
            instance: 0,
            shift: vec![0.0; dimension],
            rotation: None,
            f_opt: 0.0,
            base: entry.base,
        })
    }

    /// Evaluate at `x`: `base(R·(x - shift)) + f_opt`.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::Domain(format!(
                "point has {} coordinates, function expects {}",
                x.len(),
                self.dimension
            )));
        }
        let centred: Vec<f64> = x.iter().zip(&self.shift).map(|(a, s)| a - s).collect();
        let z = match &self.rotation {
            Some(rot) => rot
                .iter()
                .map(|row| row.iter().zip(&centred).map(|(r, c)| r * c).sum())
                .collect(),
            None => centred,
        };
        Ok(self.base.eval(&z) + self.f_opt)
    }
}

impl BaseFunction {
    fn eval(self, z: &[f64]) -> f64 {
        let d = z.len();
        match self {
            BaseFunction::Sphere => z.iter().map(|v| v * v).sum(),
            BaseFunction::SeparableEllipsoid => z
                .iter()
                .enumerate()
                .map(|(i, v)| 10f64.powf(6.0 * i as f64 / (d - 1) as f64) * v * v)
                .sum(),
            BaseFunction::AttractiveSector => z
                .iter()
                .map(|&v| {
                    let s = if v > 0.0 { 100.0 } else { 1.0 };
                    (s * v) * (s * v)
                })
                .sum(),
            BaseFunction::Rosenbrock => {
                // Shifted so the optimum sits at z = 0.
                let w: Vec<f64> = z.iter().map(|v| v + 1.0).collect();
                w.windows(2)
                    .map(|p| 100.0 * (p[0] * p[0] - p[1]).powi(2) + (p[0] - 1.0).powi(2))
                    .sum()
            }
            BaseFunction::Discus => {
                1e6 * z[0] * z[0] + z.iter().skip(1).map(|v| v * v).sum::<f64>()
            }
            BaseFunction::BentCigar => {
                z[0] * z[0] + 1e6 * z.iter().skip(1).map(|v| v * v).sum::<f64>()
            }
            BaseFunction::Rastrigin => {
                let cos_sum: f64 = z.iter().map(|v| (2.0 * std::f64::consts::PI * v).cos()).sum();
                10.0 * (d as f64 - cos_sum) + z.iter().map(|v| v * v).sum::<f64>()
            }
            BaseFunction::Schwefel => {
                // Rescaled onto the sampling box so the sine landscape
                // oscillates over it; zero at z = 0 by construction.
                const W_OPT: f64 = 420.968_746_227_503_6;
                let offset = W_OPT * W_OPT.sqrt().sin();
                z.iter()
                    .map(|&v| {
                        let w = 100.0 * v + W_OPT;
                        offset - w * w.abs().sqrt().sin()
                    })
                    .sum()
            }
            BaseFunction::Katsuura => {
                let exponent = 10.0 / (d as f64).powf(1.2);
                let prod: f64 = z
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let inner: f64 = (1..=32)
                            .map(|j| {
                                let w = 2f64.powi(j) * v;
                                (w - w.round()).abs() / 2f64.powi(j)
                            })
                            .sum();
                        (1.0 + (i as f64 + 1.0) * inner).powf(exponent)
                    })
                    .product();
                10.0 / (d as f64).powi(2) * (prod - 1.0)
            }
        }
    }
}

fn check_dimension(dimension: usize) -> Result<()> {
    if dimension < 2 {
        return Err(Error::Domain(
            "benchmark suite needs dimension at least 2".into(),
        ));
    }
    Ok(())
}

/// Materialise the ten-function suite at `dimension` for each instance
/// seed. Shifts are uniform in `[-4, 4]^d`, non-separable functions get a
/// seeded random rotation, and the fitness offset is uniform in
/// `[-100, 100]`. The same `(function, dimension, instance)` triple always
/// produces the same transforms.
pub fn suite(dimension: usize, instances: &[u32]) -> Result<Vec<ObjectiveFunction>> {
    check_dimension(dimension)?;
    let mut out = Vec::with_capacity(CATALOG.len() * instances.len());
    for &instance in instances {
        for entry in &CATALOG {
            let seed = derive_seed(
                derive_seed(0x42EB_5EED, instance as u64),
                (entry.id as u64) << 32 | dimension as u64,
            );
            let mut rng = rng_from_seed(seed);
            let shift: Vec<f64> = (0..dimension).map(|_| rng.random_range(-4.0..4.0)).collect();
            let rotation = entry
                .rotated
                .then(|| random_rotation(dimension, &mut rng));
            let f_opt = rng.random_range(-100.0..100.0);
            out.push(ObjectiveFunction {
                id: entry.id,
                name: entry.name,
                group: entry.group,
                dimension,
                instance,
                shift,
                rotation,
                f_opt,
                base: entry.base,
            });
        }
    }
    Ok(out)
}

/// Random orthogonal matrix: QR of a seeded Gaussian matrix via modified
/// Gram-Schmidt (one re-orthogonalisation pass), sign fixed by the
/// positive diagonal of R.
fn random_rotation<R: Rng>(d: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let normal = rand_distr::StandardNormal;
    let cols: Vec<Vec<f64>> = (0..d)
        .map(|_| (0..d).map(|_| rand_distr::Distribution::sample(&normal, rng)).collect())
        .collect();
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(d);
    for col in cols {
        let mut v = col;
        for _ in 0..2 {
            for prev in &q {
                let proj: f64 = prev.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, pi) in v.iter_mut().zip(prev) {
                    *vi -= proj * pi;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        q.push(v.into_iter().map(|x| x / norm).collect());
    }
    // q holds orthonormal columns; store row-major for row·vector products.
    (0..d).map(|r| (0..d).map(|c| q[c][r]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_unit_vector() {
        let f = ObjectiveFunction::unshifted(1, 4).unwrap();
        assert_eq!(f.evaluate(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 1.0);
    }

    #[test]
    fn separable_rastrigin_zero_at_origin() {
        let f = ObjectiveFunction::unshifted(7, 5).unwrap();
        assert!(f.evaluate(&[0.0; 5]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn every_function_attains_f_opt_at_its_shift() {
        let funcs = suite(3, &[1, 2]).unwrap();
        for f in &funcs {
            let at_shift = f.evaluate(f.shift()).unwrap();
            assert!(
                (at_shift - f.f_opt()).abs() < 1e-9,
                "{} instance {}: {} vs f_opt {}",
                f.name(),
                f.instance(),
                at_shift,
                f.f_opt()
            );
        }
    }

    #[test]
    fn suite_has_two_functions_per_group() {
        let funcs = suite(2, &[1]).unwrap();
        assert_eq!(funcs.len(), SUITE_SIZE);
        let groups: Vec<u8> = funcs.iter().map(|f| f.group()).collect();
        assert_eq!(groups, vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5]);
    }

    #[test]
    fn suite_is_deterministic_per_instance() {
        let a = suite(4, &[3]).unwrap();
        let b = suite(4, &[3]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn instances_differ_in_their_shift() {
        let a = suite(4, &[1]).unwrap();
        let b = suite(4, &[2]).unwrap();
        for (fa, fb) in a.iter().zip(&b) {
            assert_ne!(fa.shift(), fb.shift(), "{}", fa.name());
        }
    }

    #[test]
    fn shifts_stay_in_range() {
        for f in suite(6, &[1, 2, 3]).unwrap() {
            assert!(f.shift().iter().all(|s| (-4.0..=4.0).contains(s)));
        }
    }

    #[test]
    fn rotations_are_orthogonal() {
        for f in suite(10, &[1]).unwrap() {
            let Some(rot) = f.rotation() else { continue };
            let d = f.dimension();
            for i in 0..d {
                for j in 0..d {
                    let dot: f64 = (0..d).map(|k| rot[k][i] * rot[k][j]).sum();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (dot - expected).abs() < 1e-9,
                        "{}: R^T R [{i}][{j}] = {dot}",
                        f.name()
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = ObjectiveFunction::unshifted(1, 3).unwrap();
        assert!(matches!(f.evaluate(&[0.0, 0.0]), Err(Error::Domain(_))));
    }

    #[test]
    fn tiny_dimension_rejected() {
        assert!(matches!(suite(1, &[1]), Err(Error::Domain(_))));
        assert!(ObjectiveFunction::unshifted(1, 1).is_err());
    }

    #[test]
    fn group_five_functions_are_rugged_at_box_scale() {
        // Both weak-structure members should oscillate over [-5, 5]:
        // sample along a diagonal and count sign changes of the slope.
        for id in [9, 10] {
            let f = ObjectiveFunction::unshifted(id, 2).unwrap();
            let values: Vec<f64> = (0..200)
                .map(|k| {
                    let t = -5.0 + 10.0 * k as f64 / 199.0;
                    f.evaluate(&[t, t]).unwrap()
                })
                .collect();
            let mut sign_changes = 0;
            for w in values.windows(3) {
                if (w[1] - w[0]).signum() != (w[2] - w[1]).signum() {
                    sign_changes += 1;
                }
            }
            assert!(sign_changes > 5, "function {id} too smooth: {sign_changes}");
        }
    }
}
