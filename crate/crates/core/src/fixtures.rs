//! Named clutters used throughout the tests, the CLI examples and the
//! acceptance suite.

use crate::clutter::Clutter;
use crate::face::Face;

/// `{125, 235, 345}` on `[5]`.
pub fn dual_exam() -> Clutter {
    Clutter::from_digits(5, 2, &["125", "235", "345"])
}

/// The 2-clutter on `[6]` with circuits 123, 124, 134, 234, 345, 346, 126.
pub fn vdec_ex() -> Clutter {
    Clutter::from_digits(6, 2, &["123", "124", "134", "234", "345", "346", "126"])
}

/// The hollow octahedron with antipodal pairs 16, 24, 35.
pub fn hollow_octahedron() -> Clutter {
    Clutter::from_digits(6, 2, &["123", "125", "134", "145", "236", "256", "346", "456"])
}

/// Hollow octahedron plus the four triangles through the axis 35. Its
/// clique complex has the four tetrahedra 1235, 1345, 2356, 3456.
pub fn octahedron() -> Clutter {
    let mut circuits: Vec<Face> = hollow_octahedron().circuits().to_vec();
    circuits.extend(["135", "235", "345", "356"].map(Face::digits));
    Clutter::on_n(6, 2, circuits).expect("valid fixture")
}

/// Admissible order of the complement of [`octahedron`]
/// (monomials 162, 163, 164, 165, 124, 624, 245, 234).
pub fn octahedron_complement_order() -> Vec<Face> {
    ["126", "136", "146", "156", "124", "246", "245", "234"].map(Face::digits).to_vec()
}

/// Hachimori's minimal 8-vertex triangulation of the dunce hat (17 triangles).
pub fn dunce_hat() -> Clutter {
    Clutter::from_digits(
        8,
        2,
        &[
            "135", "235", "245", "124", "134", "348", "128", "178", "127", "237", "367", "136", "156", "456", "468",
            "678", "238",
        ],
    )
}

/// Dunce hat plus the triangle 278, whose ascent is `{1278}`.
pub fn dunce_hat_plus() -> Clutter {
    dunce_hat().add_circuit(Face::digits("278")).expect("valid fixture")
}

/// The wheel with hub 1 and rim 2-5-4-3-6: not chordal, but its ascent and
/// every deletion of a simplicial edge are chordal.
pub fn fig_graph() -> Clutter {
    Clutter::from_digits(6, 1, &["12", "13", "14", "15", "16", "25", "26", "34", "36", "45"])
}

/// All fixtures with a short name.
pub fn all() -> Vec<(&'static str, Clutter)> {
    vec![
        ("dual-exam", dual_exam()),
        ("vdec-ex", vdec_ex()),
        ("hollow-octahedron", hollow_octahedron()),
        ("octahedron", octahedron()),
        ("dunce-hat", dunce_hat()),
        ("dunce-hat-plus", dunce_hat_plus()),
        ("fig-graph", fig_graph()),
    ]
}
