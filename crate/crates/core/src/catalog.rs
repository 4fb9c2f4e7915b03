//! The construction catalog: nine ways of degenerating a complete-intersection
//! K3 surface into a nodal Calabi-Yau complete-intersection (CICY) threefold.
//!
//! Each row records the CICY degrees `(b_i)` in `P^r`, the K3 ideal generator
//! degrees `(a_j)`, the dimension `mu` of the projective space the K3 naturally
//! lives in, and the node count `ell = (2*mu - 2) * a_{r-3} * a_{r-2}`. The
//! rows are embedded as static data: they are fixed constants of the
//! construction and reading them from a file would only invite drift.

use std::fmt;

use thiserror::Error;

/// The five CICY threefold types in projective space, identified by the
/// multiset of hypersurface degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CicyType {
    /// `(5)` in `P^4`.
    Quintic,
    /// `(4,2)` in `P^5`.
    FourTwo,
    /// `(3,3)` in `P^5`.
    ThreeThree,
    /// `(3,2,2)` in `P^6`.
    ThreeTwoTwo,
    /// `(2,2,2,2)` in `P^7`.
    TwoTwoTwoTwo,
}

/// Raised when a degree multiset does not match any of the five CICY types.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a CICY type: ({0})")]
pub struct NotACicyType(pub String);

impl CicyType {
    pub const ALL: [CicyType; 5] = [
        CicyType::Quintic,
        CicyType::FourTwo,
        CicyType::ThreeThree,
        CicyType::ThreeTwoTwo,
        CicyType::TwoTwoTwoTwo,
    ];

    /// Hypersurface degrees, descending.
    pub fn degrees(self) -> &'static [u32] {
        match self {
            CicyType::Quintic => &[5],
            CicyType::FourTwo => &[4, 2],
            CicyType::ThreeThree => &[3, 3],
            CicyType::ThreeTwoTwo => &[3, 2, 2],
            CicyType::TwoTwoTwoTwo => &[2, 2, 2, 2],
        }
    }

    /// Dimension of the ambient projective space.
    pub fn ambient(self) -> u32 {
        // adjunction: sum of degrees = r + 1
        self.degrees().iter().sum::<u32>() - 1
    }

    /// Match a multiset of degrees against the five types. Order does not
    /// matter: `(2,4)` and `(4,2)` are the same CICY type.
    pub fn from_degrees(degrees: &[u32]) -> Result<CicyType, NotACicyType> {
        let mut sorted: Vec<u32> = degrees.to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        for t in CicyType::ALL {
            if t.degrees() == sorted.as_slice() {
                return Ok(t);
            }
        }
        Err(NotACicyType(
            degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ))
    }

    /// Canonical spelling used by the CLI and serialized formats.
    pub fn label(self) -> &'static str {
        match self {
            CicyType::Quintic => "5",
            CicyType::FourTwo => "4,2",
            CicyType::ThreeThree => "3,3",
            CicyType::ThreeTwoTwo => "3,2,2",
            CicyType::TwoTwoTwoTwo => "2,2,2,2",
        }
    }
}

impl fmt::Display for CicyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// The three complete-intersection K3 surface types, keyed by `mu`: the K3 is
/// a surface of degree `2*mu - 2` in `P^mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum K3Family {
    /// Type `(4)` in `P^3`, `mu = 3`.
    Quartic,
    /// Type `(2,3)` in `P^4`, `mu = 4`.
    TwoThree,
    /// Type `(2,2,2)` in `P^5`, `mu = 5`.
    TwoTwoTwo,
}

impl K3Family {
    pub fn from_mu(mu: u32) -> Option<K3Family> {
        match mu {
            3 => Some(K3Family::Quartic),
            4 => Some(K3Family::TwoThree),
            5 => Some(K3Family::TwoTwoTwo),
            _ => None,
        }
    }

    pub fn mu(self) -> u32 {
        match self {
            K3Family::Quartic => 3,
            K3Family::TwoThree => 4,
            K3Family::TwoTwoTwo => 5,
        }
    }

    /// Degree of the K3 surface in `P^mu`.
    pub fn k3_degree(self) -> u32 {
        2 * self.mu() - 2
    }
}

impl fmt::Display for K3Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            K3Family::Quartic => "(4) in P^3",
            K3Family::TwoThree => "(2,3) in P^4",
            K3Family::TwoTwoTwo => "(2,2,2) in P^5",
        };
        f.write_str(s)
    }
}

/// One row of the construction table.
///
/// Invariants (checked by [`validate_row`] and the test suite):
/// `sum(b) = sum(a)`, `a_i >= 2` for `i <= r-4`, `a_penult >= a_last`,
/// `ell = (2*mu - 2) * a_penult * a_last`, and `a_penult`, `a_last` are the
/// two trailing entries of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionRow {
    /// Position in the table, 0-based. CLI output shows 1-based numbers.
    pub index: usize,
    /// CICY hypersurface degrees, in table order (not necessarily sorted).
    pub b: &'static [u32],
    /// K3 ideal generator degrees, in table order.
    pub a: &'static [u32],
    /// The K3 surface has degree `2*mu - 2` in `P^mu`.
    pub mu: u32,
    /// Dimension of the ambient projective space.
    pub r: u32,
    /// Number of ordinary double points of the threefold, all on the K3.
    pub ell: u32,
    /// `a_{r-3}`: second-to-last K3 generator degree.
    pub a_penult: u32,
    /// `a_{r-2}`: last K3 generator degree.
    pub a_last: u32,
    /// Description of the singular locus. Documentation only, never parsed.
    pub sing_desc: &'static str,
}

impl ConstructionRow {
    pub fn k3_family(&self) -> K3Family {
        K3Family::from_mu(self.mu).expect("catalog rows have mu in {3,4,5}")
    }

    pub fn cicy_type(&self) -> CicyType {
        CicyType::from_degrees(self.b).expect("catalog rows have valid CICY degrees")
    }

    pub fn degrees_label(degs: &[u32]) -> String {
        degs.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for ConstructionRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {}: (b)=({}) (a)=({}) mu={} r={} ell={}",
            self.index + 1,
            ConstructionRow::degrees_label(self.b),
            ConstructionRow::degrees_label(self.a),
            self.mu,
            self.r,
            self.ell
        )
    }
}

const CATALOG: [ConstructionRow; 9] = [
    ConstructionRow {
        index: 0,
        b: &[5],
        a: &[4, 1],
        mu: 3,
        r: 4,
        ell: 16,
        a_penult: 4,
        a_last: 1,
        sing_desc: "X ∩ Z(α11, α12)",
    },
    ConstructionRow {
        index: 1,
        b: &[5],
        a: &[3, 2],
        mu: 4,
        r: 4,
        ell: 36,
        a_penult: 3,
        a_last: 2,
        sing_desc: "X ∩ Z(α11, α12)",
    },
    ConstructionRow {
        index: 2,
        b: &[4, 2],
        a: &[4, 1, 1],
        mu: 3,
        r: 5,
        ell: 4,
        a_penult: 1,
        a_last: 1,
        sing_desc: "X ∩ Z(α22, α23)",
    },
    ConstructionRow {
        index: 3,
        b: &[2, 4],
        a: &[2, 3, 1],
        mu: 4,
        r: 5,
        ell: 18,
        a_penult: 3,
        a_last: 1,
        sing_desc: "X ∩ Z(α11, α12α23−α13α22)",
    },
    ConstructionRow {
        index: 4,
        b: &[2, 4],
        a: &[2, 2, 2],
        mu: 5,
        r: 5,
        ell: 32,
        a_penult: 2,
        a_last: 2,
        sing_desc: "X ∩ Z(α21α12−α22α11, α21α13−α23α11)",
    },
    ConstructionRow {
        index: 5,
        b: &[3, 3],
        a: &[3, 2, 1],
        mu: 4,
        r: 5,
        ell: 12,
        a_penult: 2,
        a_last: 1,
        sing_desc: "X ∩ Z(α21α12−α22α11, α21α13−α23α11)",
    },
    ConstructionRow {
        index: 6,
        b: &[3, 2, 2],
        a: &[3, 2, 1, 1],
        mu: 4,
        r: 6,
        ell: 6,
        a_penult: 1,
        a_last: 1,
        sing_desc: "X ∩ Z(α22α33−α23α32, α22α34−α24α32)",
    },
    ConstructionRow {
        index: 7,
        b: &[2, 2, 3],
        a: &[2, 2, 2, 1],
        mu: 5,
        r: 6,
        ell: 16,
        a_penult: 2,
        a_last: 1,
        sing_desc: "X ∩ Z(linear, quadratic)",
    },
    ConstructionRow {
        index: 8,
        b: &[2, 2, 2, 2],
        a: &[2, 2, 2, 1, 1],
        mu: 5,
        r: 7,
        ell: 8,
        a_penult: 1,
        a_last: 1,
        sing_desc: "X ∩ Z(linear, quadratic)",
    },
];

/// The full construction table, in table order.
pub fn load_catalog() -> &'static [ConstructionRow; 9] {
    &CATALOG
}

/// Check every row invariant. Violations are returned as data, not raised:
/// an empty report means the row is consistent.
pub fn validate_row(row: &ConstructionRow) -> Vec<String> {
    let mut report = Vec::new();
    let sum_b: u32 = row.b.iter().sum();
    let sum_a: u32 = row.a.iter().sum();
    if sum_b != sum_a {
        report.push(format!(
            "degree sums differ: sum(b)={} but sum(a)={}",
            sum_b, sum_a
        ));
    }
    let n = row.a.len();
    if n < 2 {
        report.push("fewer than two K3 generator degrees".to_string());
        return report;
    }
    if row.a.len() != (row.r as usize) - 2 {
        report.push(format!(
            "a has {} entries, expected r-2 = {}",
            row.a.len(),
            row.r - 2
        ));
    }
    if row.b.len() + 3 != row.r as usize {
        report.push(format!(
            "b has {} entries, expected r-3 = {}",
            row.b.len(),
            row.r - 3
        ));
    }
    if row.a_penult != row.a[n - 2] || row.a_last != row.a[n - 1] {
        report.push(format!(
            "distinguished degrees ({}, {}) do not match the tail of (a)",
            row.a_penult, row.a_last
        ));
    }
    if row.a_penult < row.a_last {
        report.push(format!(
            "degree ordering violated: a_penult={} < a_last={}",
            row.a_penult, row.a_last
        ));
    }
    if row.a.iter().take(n.saturating_sub(2)).any(|&ai| ai < 2) {
        report.push("degree ordering violated: some leading a_i < 2".to_string());
    }
    if K3Family::from_mu(row.mu).is_none() {
        report.push(format!("mu={} is not one of 3, 4, 5", row.mu));
    }
    let expected_ell = (2 * row.mu - 2) * row.a_penult * row.a_last;
    if row.ell != expected_ell {
        report.push(format!(
            "node-count formula violated: ell={} but (2mu-2)*a_penult*a_last={}",
            row.ell, expected_ell
        ));
    }
    if CicyType::from_degrees(row.b).is_err() {
        report.push(format!(
            "(b)=({}) is not a CICY type",
            ConstructionRow::degrees_label(row.b)
        ));
    }
    report
}

/// All catalog rows whose CICY degree multiset equals `t`, in table order.
pub fn rows_for_type(t: CicyType) -> Vec<&'static ConstructionRow> {
    CATALOG.iter().filter(|row| row.cicy_type() == t).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_nine_valid_rows() {
        let rows = load_catalog();
        assert_eq!(rows.len(), 9);
        for row in rows.iter() {
            let report = validate_row(row);
            assert!(report.is_empty(), "row {}: {:?}", row.index + 1, report);
        }
    }

    #[test]
    fn node_counts_match_stored_column() {
        let ells: Vec<u32> = load_catalog().iter().map(|r| r.ell).collect();
        assert_eq!(ells, vec![16, 36, 4, 18, 32, 12, 6, 16, 8]);
    }

    #[test]
    fn quintic_rows() {
        let row = &load_catalog()[0];
        assert_eq!(row.b, &[5]);
        assert_eq!(row.a, &[4, 1]);
        assert_eq!((row.mu, row.r, row.ell), (3, 4, 16));
        assert_eq!((row.a_penult, row.a_last), (4, 1));
        let row = &load_catalog()[1];
        assert_eq!(row.a, &[3, 2]);
        assert_eq!(row.ell, (2 * 4 - 2) * 3 * 2);
    }

    #[test]
    fn last_row_is_all_quadrics() {
        let row = &load_catalog()[8];
        assert_eq!(row.b, &[2, 2, 2, 2]);
        assert_eq!(row.a, &[2, 2, 2, 1, 1]);
        assert_eq!((row.mu, row.r, row.ell), (5, 7, 8));
        assert_eq!((row.a_penult, row.a_last), (1, 1));
    }

    #[test]
    fn two_four_row_matches_type_four_two() {
        let row = &load_catalog()[4];
        assert_eq!(row.b, &[2, 4]);
        assert_eq!(row.cicy_type(), CicyType::FourTwo);
        assert_eq!(row.a, &[2, 2, 2]);
        assert_eq!(row.ell, 32);
    }

    #[test]
    fn tampered_ell_is_reported() {
        let mut row = load_catalog()[1];
        row.ell = 35;
        let report = validate_row(&row);
        assert!(report.iter().any(|m| m.contains("node-count formula violated")));
    }

    #[test]
    fn unsorted_distinguished_degrees_are_reported() {
        let mut row = load_catalog()[0];
        row.a = &[1, 4];
        row.a_penult = 1;
        row.a_last = 4;
        let report = validate_row(&row);
        assert!(report.iter().any(|m| m.contains("degree ordering violated")));
    }

    #[test]
    fn rows_partition_across_types() {
        let counts: Vec<usize> = CicyType::ALL
            .iter()
            .map(|&t| rows_for_type(t).len())
            .collect();
        assert_eq!(counts, vec![2, 3, 1, 2, 1]);
        assert_eq!(counts.iter().sum::<usize>(), 9);
        // every row matches exactly one type
        for row in load_catalog().iter() {
            let matches = CicyType::ALL
                .iter()
                .filter(|&&t| {
                    let mut sorted = row.b.to_vec();
                    sorted.sort_unstable_by(|x, y| y.cmp(x));
                    t.degrees() == sorted.as_slice()
                })
                .count();
            assert_eq!(matches, 1);
        }
    }

    #[test]
    fn type_lookup_by_multiset() {
        assert_eq!(CicyType::from_degrees(&[2, 4]).unwrap(), CicyType::FourTwo);
        assert_eq!(
            CicyType::from_degrees(&[2, 2, 3]).unwrap(),
            CicyType::ThreeTwoTwo
        );
        assert!(CicyType::from_degrees(&[6]).is_err());
        assert!(CicyType::from_degrees(&[3, 3, 3]).is_err());
    }

    #[test]
    fn adjunction_holds_for_all_types() {
        for t in CicyType::ALL {
            assert_eq!(t.degrees().iter().sum::<u32>(), t.ambient() + 1);
        }
    }

    #[test]
    fn k3_family_is_determined_by_mu() {
        for row in load_catalog().iter() {
            let fam = row.k3_family();
            assert_eq!(fam.mu(), row.mu);
            assert_eq!(fam.k3_degree(), 2 * row.mu - 2);
        }
    }
}
