use std::path::Path;

use super::{load_config, output_dir, Manifest, MANIFEST_FILE};
use crate::config::{plan, Job, Overrides};
use crate::error::CliError;
use crate::io;

/// Build every set, then write sequences, carriers and finally the manifest.
/// Validation happens entirely before the first write.
pub fn generate(config: &Path, ov: Overrides) -> Result<Job, CliError> {
    let cfg = load_config(config)?;
    let job = plan(&cfg, ov)?;
    let dir = output_dir(&job);
    let manifest = Manifest::for_job(&job);
    for (set, entry) in job.sets.iter().zip(&manifest.sets) {
        io::write_atomic(&dir.join(&entry.carrier), &io::sequence_csv(set.carrier()))?;
        for (x, name) in set.sequences().iter().zip(&entry.sequences) {
            io::write_atomic(&dir.join(name), &io::sequence_csv(x))?;
        }
    }
    io::write_atomic(&dir.join(MANIFEST_FILE), &io::json_bytes(&manifest))?;
    let il = &job.interlace;
    println!(
        "generated {} set(s) of {} sequences, N = {}, L = {} in {}",
        job.sets.len(),
        il.a(),
        il.n(),
        il.l(),
        dir.display()
    );
    Ok(job)
}
