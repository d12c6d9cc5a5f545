//! Globally adaptive 7/15-point Gauss–Kronrod quadrature.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights attached to XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kron * half;
    let error = ((kron - gauss) * half).abs();
    Panel { a, b, value, error }
}

impl Integrator {
    /// Integrates `f` over `[breaks[0], breaks[last]]`, seeding the
    /// adaptive refinement with the given panel boundaries.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, breaks: &[f64]) -> Result<QuadResult> {
        assert!(breaks.len() >= 2, "need at least one panel");
        let mut heap = BinaryHeap::with_capacity(breaks.len() * 2);
        for w in breaks.windows(2) {
            if w[1] > w[0] {
                heap.push(kronrod(&f, w[0], w[1]));
            }
        }
        let mut subdivisions = 0;
        loop {
            let (value, error) = heap
                .iter()
                .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
            if !value.is_finite() {
                return Err(Error::NoConvergence {
                    routine: "adaptive quadrature",
                    detail: "non-finite integrand".into(),
                });
            }
            if error <= self.abs_tol.max(self.rel_tol * value.abs()) {
                return Ok(QuadResult {
                    value,
                    error,
                    subdivisions,
                });
            }
            if subdivisions >= self.max_subdivisions {
                return Err(Error::NoConvergence {
                    routine: "adaptive quadrature",
                    detail: format!(
                        "{subdivisions} subdivisions exhausted, value {value:.6e} +/- {error:.2e}"
                    ),
                });
            }
            // refine a batch of the worst panels before re-summing
            let batch = (heap.len() / 8).clamp(1, 64);
            for _ in 0..batch {
                let Some(worst) = heap.pop() else { break };
                let mid = 0.5 * (worst.a + worst.b);
                if mid <= worst.a || mid >= worst.b {
                    // panel cannot be split further in f64
                    heap.push(Panel {
                        error: 0.0,
                        ..worst
                    });
                    continue;
                }
                heap.push(kronrod(&f, worst.a, mid));
                heap.push(kronrod(&f, mid, worst.b));
                subdivisions += 1;
            }
        }
    }
}
