use super::{ModuleKind, ModuleSpec};

pub const ONE_QUBIT: &str = "One-qubit";
pub const TWO_QUBIT: &str = "Two-qubit";
pub const CHAIN: &str = "Chain";
pub const T_MODULE: &str = "T";
pub const LOGICAL_QUBIT: &str = "1 Log. qubit";
pub const REGISTER: &str = "8 Log. qubits";

/// The device blocks at 40 nm inter-dot distance, with their tabulated
/// dimensions, areas and data/communication qubit counts.
pub fn builtin_catalog() -> Vec<ModuleSpec> {
    vec![
        ModuleSpec::new(ONE_QUBIT, 0.3, 0.5, 1, 0).with_area(0.15),
        ModuleSpec::new(TWO_QUBIT, 0.38, 0.5, 2, 0).with_area(0.19),
        ModuleSpec::new(CHAIN, 0.16, 0.46, 0, 2)
            .with_area(0.0736)
            .with_kind(ModuleKind::Chain),
        ModuleSpec::new(T_MODULE, 1.3, 0.7, 0, 7)
            .with_area(0.91)
            .with_kind(ModuleKind::Junction),
        ModuleSpec::new(LOGICAL_QUBIT, 11.38, 2.52, 20, 70)
            .with_area(28.6776)
            .with_kind(ModuleKind::Composite),
        // 25.54 x 12.04 is 307.5016; the tabulated area is rounded to 307.502.
        ModuleSpec::new(REGISTER, 25.54, 12.04, 1720, 1400)
            .with_area(307.502)
            .with_kind(ModuleKind::Composite),
    ]
}

pub fn lookup(name: &str) -> Option<ModuleSpec> {
    builtin_catalog().into_iter().find(|m| m.name == name)
}

/// How many physical data qubits a logical qubit holds. The tabulated count
/// is 20; the register drawing describes each logical qubit as 20 *double*
/// data-qubit gates, which would make it 40.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DataQubitReading {
    #[default]
    Tabulated,
    DoubleDataQubits,
}

impl DataQubitReading {
    pub fn logical_qubit_data_qubits(self) -> u32 {
        match self {
            Self::Tabulated => 20,
            Self::DoubleDataQubits => 40,
        }
    }
}

/// Source of the qubit counts reported for the 8-logical-qubit register:
/// the tabulated 1720/1400, or the sums over the reference composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountReading {
    #[default]
    Tabulated,
    Composed,
}
