use super::CatalogError;

/// Finite group as a multiplication table over element indices, with display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        GroupTable { names, table }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        (0..self.len())
            .find(|&e| (0..self.len()).all(|g| self.table[e][g] == g && self.table[g][e] == g))
            .expect("validated table has an identity")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let e = self.identity();
        (0..self.len())
            .find(|&h| self.table[g][h] == e)
            .expect("validated table has inverses")
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let n = self.len();
        if n == 0 || self.names.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(CatalogError::NotAGroup("table shape".into()));
        }
        if self.table.iter().flatten().any(|&k| k >= n) {
            return Err(CatalogError::NotAGroup("entry out of range".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(CatalogError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| self.mul(e, g) == g && self.mul(g, e) == g))
        else {
            return Err(CatalogError::NotAGroup("no identity".into()));
        };
        if let Some(g) = (0..n).find(|&g| !(0..n).any(|h| self.mul(g, h) == e && self.mul(h, g) == e)) {
            return Err(CatalogError::NotAGroup(format!("element {g} has no inverse")));
        }
        Ok(())
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|h| self.mul(self.mul(h, g), self.inverse(h)))
                .collect();
            class.sort();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&h| self.mul(h, g) == self.mul(g, h))
            .collect()
    }
}

fn from_elements<T: PartialEq + Clone>(
    elements: &[T],
    names: Vec<String>,
    mul: impl Fn(&T, &T) -> T,
) -> GroupTable {
    let index = |t: &T| elements.iter().position(|u| u == t).expect("closed under product");
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index(&mul(a, b))).collect())
        .collect();
    GroupTable::new(names, table)
}

pub fn cyclic_table(n: usize) -> GroupTable {
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable::new(names, table)
}

/// S₃ as permutations of {0, 1, 2} (as image lists), composed right to left.
pub fn symmetric3_table() -> GroupTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let names = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    from_elements(&perms, names, |p, q| [p[q[0]], p[q[1]], p[q[2]]])
}

/// D₄ = ⟨r, s | r⁴ = s² = 1, srs = r⁻¹⟩, elements r^a s^b as (a, b).
pub fn dihedral4_table() -> GroupTable {
    let elements: Vec<(usize, usize)> = (0..2).flat_map(|b| (0..4).map(move |a| (a, b))).collect();
    let names = elements
        .iter()
        .map(|&(a, b)| match (a, b) {
            (0, 0) => "1".to_string(),
            (0, 1) => "s".to_string(),
            (1, 0) => "r".to_string(),
            (1, 1) => "rs".to_string(),
            (_, 0) => format!("r^{a}"),
            _ => format!("r^{a}s"),
        })
        .collect();
    // r^a s^b · r^c s^d = r^{a + (−1)^b c} s^{b+d}
    from_elements(&elements, names, |&(a, b), &(c, d)| {
        let c = if b == 1 { (4 - c) % 4 } else { c };
        ((a + c) % 4, (b + d) % 2)
    })
}

/// Q₈ as unit quaternions (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
pub fn quaternion_table() -> GroupTable {
    let elements: Vec<(i8, usize)> = (0..4).flat_map(|u| [(1, u), (-1, u)]).collect();
    let names = elements
        .iter()
        .map(|&(s, u)| {
            let base = ["1", "i", "j", "k"][u];
            if s > 0 {
                base.to_string()
            } else {
                format!("-{base}")
            }
        })
        .collect();
    from_elements(&elements, names, |&(s, u), &(t, v)| {
        let (sign, axis) = quaternion_units(u, v);
        (s * t * sign, axis)
    })
}

fn quaternion_units(u: usize, v: usize) -> (i8, usize) {
    match (u, v) {
        (0, w) | (w, 0) => (1, w),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!("axes are 0..4"),
    }
}
