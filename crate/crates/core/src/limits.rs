/// Size bounds on the enumerations performed by the engine.
///
/// Every finite representation in the crate (model sets, clause universes,
/// representative sets, subset lattices) grows exponentially in the signature
/// or base size, so each one is guarded by a limit. Exceeding a limit yields
/// [`Error::LimitExceeded`](crate::Error::LimitExceeded), never a silent cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest signature for model enumeration.
    pub prop_atoms: usize,
    /// Largest signature for the Horn clause universe.
    pub clause_atoms: usize,
    /// Largest representative set of a closed propositional theory.
    pub representatives: usize,
    /// Largest base scanned exhaustively; bigger bases use hitting-set duality.
    pub exhaustive_base: usize,
    /// Largest infra family that is enumerated.
    pub infra_family: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        prop_atoms: 4,
        clause_atoms: 4,
        representatives: 256,
        exhaustive_base: 20,
        infra_family: 4096,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
