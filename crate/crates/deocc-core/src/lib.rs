//! Two-stage de-occlusion of articulated stick figures on procedurally
//! generated scenes.
//!
//! Stage one completes the amodal mask from the modal mask and an
//! occluded-joint heatmap, guided by features from a small pose-conditioned
//! backbone. Stage two completes the RGB appearance with a conditional
//! latent-diffusion model and per-image decoder fine-tuning.
//!
//! The crate is organized around the pipeline:
//!
//! - [`scene`]: procedural scene generation with exact ground truth
//! - [`skeleton`] / [`heatmap`]: joint topology, subdivision, occluded-joint
//!   heatmaps
//! - [`diffusion`]: noise schedule, forward process, DDIM sampling
//! - [`codec`]: latent encoder/decoder plus per-image decoder fine-tuning
//! - [`prior`] / [`masknet`]: stage-one mask completion
//! - [`rgbnet`]: stage-two RGB completion
//! - [`baselines`]: one-stage and feedforward two-stage reference models
//! - [`metrics`]: mask and pixel metrics with region restriction
//! - [`pipeline`]: experiment drivers shared by the CLI and the test suite

pub mod baselines;
pub mod checkpoint;
pub mod codec;
pub mod config;
pub mod diffusion;
pub mod error;
pub mod heatmap;
pub mod inpaint;
pub mod manifest;
pub mod masknet;
pub mod metrics;
pub mod nn;
pub mod pipeline;
pub mod prior;
pub mod raster;
pub mod rgbnet;
pub mod scene;
pub mod seed;
pub mod skeleton;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use raster::{Image, Mask};
pub use scene::record::SceneRecord;
pub use skeleton::{JointSet, SkeletonTopology};
