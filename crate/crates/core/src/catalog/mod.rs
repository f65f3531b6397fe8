//! Built-in quasi-triangular Hopf algebras: group algebras with the trivial R-matrix, kℤ/2
//! with its nontrivial R-matrix, and the 8-dimensional Kac–Paljutkin algebra.

mod groups;

use num_integer::Integer;
use thiserror::Error;

use crate::algengine::FinAlgebra;
use crate::exactfield::CycNumber;
use crate::hopfcore::{Coproduct, HopfAlgebra, Tensor};
use crate::linalg::Mat;

pub use groups::{cyclic_table, dihedral4_table, quaternion_table, symmetric3_table, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("unknown built-in {0:?}")]
    Unknown(String),
}

/// A named (H, R) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub hopf: HopfAlgebra,
    pub r_matrix: Tensor,
}

impl CatalogEntry {
    pub fn order(&self) -> u32 {
        self.hopf.order()
    }
}

pub const BUILTIN_NAMES: &[&str] = &["z2", "z2_minus", "s3", "d4", "q8", "z_n", "h8"];

/// Looks up a built-in. Cyclic groups are `z_<n>` or `z<n>`.
pub fn builtin(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = |hopf_r: (HopfAlgebra, Tensor)| CatalogEntry {
        name: name.to_string(),
        hopf: hopf_r.0,
        r_matrix: hopf_r.1,
    };
    match name {
        "z2_minus" => Ok(entry(z2_minus())),
        "h8" => Ok(entry(kac_paljutkin())),
        _ => Ok(entry(group_algebra(&builtin_group(name)?, None)?)),
    }
}

/// The group behind a group-algebra built-in.
pub fn builtin_group(name: &str) -> Result<GroupTable, CatalogError> {
    match name {
        "s3" => Ok(symmetric3_table()),
        "d4" => Ok(dihedral4_table()),
        "q8" => Ok(quaternion_table()),
        _ => name
            .strip_prefix("z_")
            .or_else(|| name.strip_prefix('z'))
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(cyclic_table)
            .ok_or_else(|| CatalogError::Unknown(name.to_string())),
    }
}

/// Exponent of a group given by its table.
pub fn exponent(table: &GroupTable) -> usize {
    let e = table.identity();
    (0..table.len())
        .map(|g| {
            let mut k = 1;
            let mut p = g;
            while p != e {
                p = table.mul(p, g);
                k += 1;
            }
            k
        })
        .fold(1, |acc, k| acc.lcm(&k))
}

/// Default working field for a group: ℚ(ζ_m) with m = lcm(4, exponent).
pub fn default_group_order(table: &GroupTable) -> u32 {
    exponent(table).lcm(&4) as u32
}

/// kG with Δg = g⊗g, Sg = g⁻¹, ε(g) = 1 and R = 1⊗1.
pub fn group_algebra(
    table: &GroupTable,
    order: Option<u32>,
) -> Result<(HopfAlgebra, Tensor), CatalogError> {
    table.validate()?;
    let order = order.unwrap_or_else(|| default_group_order(table));
    let n = table.len();
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| table.mul(a, b)).collect()).collect();
    let algebra = FinAlgebra::group_algebra(order, &rows);
    let one = CycNumber::one(order);
    let comult = (0..n).map(|g| vec![(g, g, one.clone())]).collect();
    let antipode = Mat::from_fn(order, n, n, |i, j| {
        if i == table.inverse(j) {
            one.clone()
        } else {
            CycNumber::zero(order)
        }
    });
    let hopf = HopfAlgebra::new(
        table.names().to_vec(),
        algebra,
        comult,
        vec![one; n],
        antipode,
    );
    let e = table.identity();
    let r = Tensor::basis(order, n, &[e, e]);
    Ok((hopf, r))
}

fn half(order: u32, sign: i64) -> CycNumber {
    CycNumber::from_frac(order, sign, 2)
}

/// kℤ/2 over ℚ(i) with R₋ = ½(1⊗1 + 1⊗x + x⊗1 − x⊗x).
pub fn z2_minus() -> (HopfAlgebra, Tensor) {
    let (hopf, _) = group_algebra(&cyclic_table(2), None).expect("ℤ/2 is a group");
    let order = hopf.order();
    let mut data = vec![CycNumber::zero(order); 4];
    data[0] = half(order, 1);
    data[1] = half(order, 1);
    data[2] = half(order, 1);
    data[3] = half(order, -1);
    (hopf, Tensor::from_data(order, 2, 2, data))
}

/// Index of x^a y^b z^c in the basis 1, x, y, xy, z, xz, yz, xyz.
fn kp_index(a: usize, b: usize, c: usize) -> usize {
    (a % 2) + 2 * (b % 2) + 4 * c
}

fn kp_exponents(i: usize) -> (usize, usize, usize) {
    (i % 2, (i / 2) % 2, i / 4)
}

/// x^a y^b z^c · x^a' y^b' z^c', using z x^a y^b = x^b y^a z and z² = ½(1 + x + y − xy).
fn kp_product(i: usize, j: usize) -> Vec<(usize, CycNumber)> {
    let order = 4;
    let (a, b, c) = kp_exponents(i);
    let (a2, b2, c2) = kp_exponents(j);
    match (c, c2) {
        (0, _) => vec![(kp_index(a + a2, b + b2, c2), CycNumber::one(order))],
        (_, 0) => vec![(kp_index(a + b2, b + a2, 1), CycNumber::one(order))],
        _ => {
            let (x, y) = (a + b2, b + a2);
            vec![
                (kp_index(x, y, 0), half(order, 1)),
                (kp_index(x + 1, y, 0), half(order, 1)),
                (kp_index(x, y + 1, 0), half(order, 1)),
                (kp_index(x + 1, y + 1, 0), half(order, -1)),
            ]
        }
    }
}

/// The Kac–Paljutkin algebra H₈ over ℚ(i) with its R-matrix ½(1⊗1 + 1⊗x + y⊗1 − y⊗x).
pub fn kac_paljutkin() -> (HopfAlgebra, Tensor) {
    let order = 4;
    let d = 8;
    let mult = (0..d * d).map(|ij| kp_product(ij / d, ij % d)).collect();
    let mut unit = vec![CycNumber::zero(order); d];
    unit[0] = CycNumber::one(order);
    let algebra = FinAlgebra::from_sparse(order, d, mult, unit);
    let names: Vec<String> = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let one = CycNumber::one(order);

    // Δ on generators, extended multiplicatively
    let scaffold = HopfAlgebra::new(
        names.clone(),
        algebra.clone(),
        vec![Vec::new(); d],
        vec![one.clone(); d],
        Mat::identity(order, d),
    );
    let x = Tensor::basis(order, d, &[1, 1]);
    let y = Tensor::basis(order, d, &[2, 2]);
    let mut z = Tensor::zeros(order, d, 2);
    for (idx, sign) in [([4, 4], 1), ([4, 5], 1), ([6, 4], 1), ([6, 5], -1)] {
        z = z.add(&Tensor::basis(order, d, &idx).scale(&half(order, sign)));
    }
    let comult: Vec<Coproduct> = (0..d)
        .map(|i| {
            let (a, b, c) = kp_exponents(i);
            let mut t = scaffold.unit_tensor(2);
            for (present, g) in [(a, &x), (b, &y), (c, &z)] {
                if present == 1 {
                    t = scaffold.tensor_mul(&t, g);
                }
            }
            t.nonzeros().map(|(ix, v)| (ix[0], ix[1], v.clone())).collect()
        })
        .collect();

    // S(x^a y^b) = x^a y^b and S(x^a y^b z) = z x^a y^b = x^b y^a z
    let antipode = Mat::from_fn(order, d, d, |r, col| {
        let (a, b, c) = kp_exponents(col);
        let image = if c == 0 { col } else { kp_index(b, a, 1) };
        if r == image {
            one.clone()
        } else {
            CycNumber::zero(order)
        }
    });
    let hopf = HopfAlgebra::new(names, algebra, comult, vec![one; d], antipode);

    let mut r = Tensor::zeros(order, d, 2);
    for (idx, sign) in [([0, 0], 1), ([0, 1], 1), ([2, 0], 1), ([2, 1], -1)] {
        r = r.add(&Tensor::basis(order, d, &idx).scale(&half(order, sign)));
    }
    (hopf, r)
}


/// Sweedler's 4-dimensional algebra on 1, g, x, gx (g² = 1, x² = 0, xg = −gx), the
/// smallest non-semisimple Hopf algebra. Used as a negative control.
pub fn sweedler() -> HopfAlgebra {
    let order = 1;
    let one = CycNumber::one(order);
    let idx = |a: usize, b: usize| (a % 2) + 2 * b;
    let mult = (0..16)
        .map(|ij| {
            let (i, j) = (ij / 4, ij % 4);
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d >= 2 {
                return Vec::new();
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            vec![(idx(a + c, b + d), CycNumber::from_int(order, sign))]
        })
        .collect();
    let mut unit = vec![CycNumber::zero(order); 4];
    unit[0] = one.clone();
    let algebra = FinAlgebra::from_sparse(order, 4, mult, unit);
    let comult = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        vec![(2, 0, one.clone()), (1, 2, one.clone())],
        vec![(3, 1, one.clone()), (0, 3, one.clone())],
    ];
    let counit = vec![one.clone(), one.clone(), CycNumber::zero(order), CycNumber::zero(order)];
    let mut antipode = Mat::zeros(order, 4, 4);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(3, 2, -one.clone());
    antipode.set(2, 3, one);
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    HopfAlgebra::new(names, algebra, comult, counit, antipode)
}
