//! Community detection and community-level statistics.

mod density;
mod louvain;
mod modularity;

pub use density::{
    community_stats, estimate_mixing, estimate_mixing_with, interconnection_densities,
    interconnection_density, CommunityStats, MixingEstimator,
};
pub use louvain::{louvain, louvain_detailed, LouvainOutcome};
pub use modularity::modularity;
