//! Unsupervised prompt learning for budgeted data pre-selection.
//!
//! The pipeline: a small set of learnable context vectors (the prompt) is fed
//! together with frozen image features through a frozen cross-attention fuser.
//! The fused features drive two heads, an instance-level projection trained
//! with a contrastive loss over augmented views and a cluster-level head
//! trained with a column-contrastive loss plus an entropy regularizer. After
//! training, instances are pre-selected for labeling under a fixed budget,
//! one representative per cluster (highest confidence or medoid), and the
//! quality of the selected set is scored with KNN, a linear probe, and a
//! KL-to-uniform balance metric.
//!
//! Everything is deterministic per seed: the same dataset and config produce
//! bit-identical parameters, selections, and report files.

pub mod augment;
pub mod checkpoint;
pub mod dataset;
pub mod error;
pub mod evaluation;
pub mod experiment;
pub mod fusion;
pub mod losses;
pub mod model;
pub mod numerics;
pub mod real;
pub mod rng;
pub mod selection;
pub mod trainer;

pub use augment::AugmentPolicy;
pub use dataset::{EmbeddingDataset, SynthConfig};
pub use error::{Error, Result};
pub use losses::LossBreakdown;
pub use model::{ModelConfig, ModelState};
pub use real::{Precision, Real};
pub use selection::{ClusterAssignment, SelectionResult};
pub use trainer::{TrainConfig, TrainHistory, Trainer};
