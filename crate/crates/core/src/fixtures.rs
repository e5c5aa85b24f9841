//! Named example planes and families used across tests, benches and the CLI.

use crate::degeneration::LaurentPlane;
use crate::grassmann::Plane;

/// The plane with rows `(1,0), (0,1), (1,1), (1,2), (1,3)`.
pub fn w5() -> Plane {
    Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)]).expect("rank 2")
}

fn family(rows: &[(&str, &str)]) -> LaurentPlane {
    let rows = rows.iter().map(|(a, b)| [a.parse().expect("valid"), b.parse().expect("valid")]).collect();
    LaurentPlane::new(rows).expect("generic rank 2")
}

/// Row 5 slides onto row 4: `(1,0), (0,1), (1,1), (1,2), (1,2+t)`.
pub fn d1() -> LaurentPlane {
    family(&[("1", "0"), ("0", "1"), ("1", "1"), ("1", "2"), ("1", "2+t")])
}

/// Row 4 slides onto row 3: `(1,0), (0,1), (1,1), (1,1+t), (1,2)`.
pub fn d2() -> LaurentPlane {
    family(&[("1", "0"), ("0", "1"), ("1", "1"), ("1", "1+t"), ("1", "2")])
}
