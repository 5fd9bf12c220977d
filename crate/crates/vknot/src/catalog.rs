//! Built-in examples.

use thiserror::Error;

use vknot_core::free::FreeKnotDiagram;
use vknot_core::seifert::validate;
use vknot_core::GaussDiagram;

use crate::surface_file::parse_surface;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Gauss,
    Free,
    Surface,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Transcribed,
    Constructed,
    SearchFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub payload: &'static str,
    pub provenance: Provenance,
    pub notes: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("no catalog entry named `{name}`{}", note.map(|n| format!(": {n}")).unwrap_or_default())]
    NoSuchEntry { name: String, note: Option<&'static str> },
}

const VIRTUAL_TREFOIL_SURFACE: &str = include_str!("../data/virtual-trefoil-genus2.surface");

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "unknot",
        kind: Kind::Gauss,
        payload: "",
        provenance: Provenance::Constructed,
        notes: "the empty diagram",
    },
    CatalogEntry {
        name: "kink",
        kind: Kind::Gauss,
        payload: "O1+,U1+",
        provenance: Provenance::Constructed,
        notes: "one-crossing diagram of the unknot",
    },
    CatalogEntry {
        name: "trefoil",
        kind: Kind::Gauss,
        payload: "O1+,U2+,O3+,U1+,O2+,U3+",
        provenance: Provenance::Constructed,
        notes: "classical trefoil, closure of the braid s1^3",
    },
    CatalogEntry {
        name: "figure-eight",
        kind: Kind::Gauss,
        payload: "O1+,U2-,O3-,U1+,O4+,U3-,O2-,U4+",
        provenance: Provenance::Constructed,
        notes: "closure of the braid s1 s2^-1 s1 s2^-1",
    },
    CatalogEntry {
        name: "virtual-trefoil",
        kind: Kind::Gauss,
        payload: "O1+,O2+,U1+,U2+",
        provenance: Provenance::Constructed,
        notes: "two-crossing virtual knot; not realizable, odd writhe 2",
    },
    CatalogEntry {
        name: "inverse-detected",
        kind: Kind::Gauss,
        payload: "O1+,O2+,O3+,U1+,U3+,U2+",
        provenance: Provenance::SearchFound,
        notes: "first diagram, in enumeration order, whose Sawollek polynomial differs from that of its inverse",
    },
    CatalogEntry {
        name: "sawollek-six",
        kind: Kind::Gauss,
        payload: "O1+,O2+,O3-,U4+,U2+,O5+,U6-,U5+,U1+,O6-,O4+,U3-",
        provenance: Provenance::SearchFound,
        notes: "six-crossing diagram with Sawollek polynomial x^2-x^3+x^2/y-x^3/y+xy-y^2+xy^2",
    },
    CatalogEntry {
        name: "irreducibly-odd",
        kind: Kind::Free,
        payload: "X1,X2,X1,X3,X4,X2,X5,X3,X5,X6,X4,X6",
        provenance: Provenance::SearchFound,
        notes: "smallest irreducibly odd free knot (six chords, first of three dihedral classes)",
    },
    CatalogEntry {
        name: "virtual-trefoil-surface",
        kind: Kind::Surface,
        payload: VIRTUAL_TREFOIL_SURFACE,
        provenance: Provenance::Constructed,
        notes: "the virtual trefoil drawn on the standard genus-2 surface",
    },
];

/// Figure examples whose diagrams have not been transcribed yet.
const GATED: &[(&str, &str)] = &[
    ("khat1", "awaiting transcription of the figure diagram"),
    ("khat2", "awaiting transcription of the figure diagram"),
    ("khat3", "awaiting transcription of the figure diagram"),
    ("khat4", "awaiting transcription of the figure diagram"),
    ("kishino", "awaiting transcription of the genus-2 surface representative"),
];

pub fn list() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn get(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| CatalogError::NoSuchEntry {
        name: name.to_string(),
        note: GATED.iter().find(|g| g.0 == name).map(|g| g.1),
    })
}

impl CatalogEntry {
    /// Whether the payload parses (and validates) under its kind.
    pub fn check(&self) -> Result<(), String> {
        match self.kind {
            Kind::Gauss => self.payload.parse::<GaussDiagram>().map(|_| ()).map_err(|e| e.to_string()),
            Kind::Free => FreeKnotDiagram::parse(self.payload).map(|_| ()).map_err(|e| e.to_string()),
            Kind::Surface => {
                let sd = parse_surface(self.payload).map_err(|e| e.to_string())?;
                let v = validate(&sd);
                if v.is_empty() {
                    Ok(())
                } else {
                    Err(format!("{v:?}"))
                }
            }
        }
    }
}
