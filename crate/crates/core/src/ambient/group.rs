use std::fmt;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl FiniteGroup {
    /// Validates closure, associativity, identity (element 0) and inverses.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput(format!("group `{name}`: table is not closed")));
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::InvalidInput(format!("group `{name}`: element 0 is not the identity")));
            }
            if !(0..n).any(|b| table[a][b] == 0) {
                return Err(Error::InvalidInput(format!("group `{name}`: element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!("group `{name}`: table is not associative")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), table })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("Z{n}"), table).expect("cyclic group")
    }

    /// Direct product; element (a, b) has index a * |H| + b.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (g.order(), h.order());
        let table =
            (0..n * m).map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect()).collect();
        FiniteGroup::from_table(&format!("{}x{}", g.name, h.name), table).expect("product group")
    }

    /// Parses names such as `Z2`, `Z3`, `Z2xZ2`, `1`.
    pub fn by_name(name: &str) -> Result<FiniteGroup> {
        let parts: Vec<&str> = name.split(['x', 'X', '*']).map(str::trim).collect();
        let mut acc: Option<FiniteGroup> = None;
        for p in parts {
            let n: usize = if p == "1" {
                1
            } else {
                p.strip_prefix('Z')
                    .or_else(|| p.strip_prefix('C'))
                    .and_then(|s| s.parse().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown group `{name}`")))?
            };
            let c = FiniteGroup::cyclic(n);
            acc = Some(match acc {
                None => c,
                Some(g) => FiniteGroup::product(&g, &c),
            });
        }
        let mut g = acc.ok_or_else(|| Error::InvalidInput(format!("unknown group `{name}`")))?;
        g.name = name.to_string();
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("inverses exist")
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Number of conjugacy classes.
    pub fn num_conjugacy_classes(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for a in 0..n {
            if seen[a] {
                continue;
            }
            count += 1;
            for g in 0..n {
                seen[self.mul(self.mul(g, a), self.inverse(g))] = true;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups() {
        assert_eq!(FiniteGroup::by_name("Z2").unwrap().order(), 2);
        let k = FiniteGroup::by_name("Z2xZ2").unwrap();
        assert_eq!(k.order(), 4);
        assert!((0..4).all(|a| k.mul(a, a) == 0));
        assert!(FiniteGroup::by_name("Q8").is_err());
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
