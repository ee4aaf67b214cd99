//! Named graph families, addressed either by `generate` flags or by an
//! inline `name:args` spec such as `tnd:5,0,0,0` or `random:20,4,7`.

use closeness_core::generators::{
    complete, cycle, path, pentagon, petersen, random_connected_graph, star, t_tree, TndSpec,
};
use closeness_core::Graph;

use crate::CliError;

pub const FAMILIES: [&str; 9] = [
    "path", "cycle", "complete", "star", "bistar", "tnd", "petersen", "pentagon", "random",
];

#[derive(Debug, Clone, Default)]
pub struct FamilyRequest {
    pub family: String,
    pub n: Option<usize>,
    pub r: Option<Vec<usize>>,
    pub extra: Option<usize>,
    pub seed: Option<u64>,
}

pub struct Generated {
    pub graph: Graph,
    pub label: String,
    /// Set when the `r` list had to be sorted into non-increasing order.
    pub canonicalized: bool,
}

fn missing(name: &str, family: &str) -> CliError {
    CliError::Usage(format!(
        "invalid parameter `{name}`: required by family `{family}`"
    ))
}

fn join(r: &[usize]) -> String {
    r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl FamilyRequest {
    /// Parses `name` or `name:a,b,...`.
    pub fn parse_spec(spec: &str) -> Result<Self, CliError> {
        let (name, args) = match spec.split_once(':') {
            Some((name, args)) => (name.trim(), args.trim()),
            None => (spec.trim(), ""),
        };
        let nums: Vec<u64> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|t| {
                    t.trim().parse::<u64>().map_err(|_| {
                        CliError::Usage(format!("invalid family spec `{spec}`: bad number `{t}`"))
                    })
                })
                .collect::<Result<_, _>>()?
        };
        let arity = |k: usize| -> Result<(), CliError> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(CliError::Usage(format!(
                    "invalid family spec `{spec}`: `{name}` takes {k} argument(s)"
                )))
            }
        };
        let mut req = FamilyRequest {
            family: name.to_string(),
            ..Default::default()
        };
        match name {
            "path" | "cycle" | "complete" | "star" => {
                arity(1)?;
                req.n = Some(nums[0] as usize);
            }
            "bistar" | "tnd" => req.r = Some(nums.iter().map(|&x| x as usize).collect()),
            "petersen" | "pentagon" => arity(0)?,
            "random" => {
                arity(3)?;
                req.n = Some(nums[0] as usize);
                req.extra = Some(nums[1] as usize);
                req.seed = Some(nums[2]);
            }
            _ => return Err(unknown_family(name)),
        }
        Ok(req)
    }

    pub fn build(&self) -> Result<Generated, CliError> {
        let name = self.family.as_str();
        let need_n = || self.n.ok_or_else(|| missing("n", name));
        let plain = |graph: Graph, label: String| Generated {
            graph,
            label,
            canonicalized: false,
        };
        Ok(match name {
            "path" => {
                let n = need_n()?;
                plain(path(n)?, format!("P{n}"))
            }
            "cycle" => {
                let n = need_n()?;
                plain(cycle(n)?, format!("C{n}"))
            }
            "complete" => {
                let n = need_n()?;
                plain(complete(n)?, format!("K{n}"))
            }
            "star" => {
                let n = need_n()?;
                plain(star(n)?, format!("S{n}"))
            }
            "petersen" => plain(petersen(), "petersen".into()),
            "pentagon" => plain(pentagon(), "pentagon".into()),
            "bistar" => {
                let r = match (&self.r, self.n) {
                    (Some(r), _) => r.clone(),
                    (None, Some(n)) if n >= 3 => vec![n - 3, 0],
                    (None, Some(n)) => {
                        return Err(CliError::Usage(format!(
                            "invalid parameter `n`: bistar needs at least 3 vertices, got {n}"
                        )))
                    }
                    (None, None) => return Err(missing("r", name)),
                };
                if r.len() != 2 {
                    return Err(CliError::Usage(format!(
                        "invalid parameter `r`: bistar takes exactly 2 entries, got {}",
                        r.len()
                    )));
                }
                tnd(r)?
            }
            "tnd" => tnd(self.r.clone().ok_or_else(|| missing("r", name))?)?,
            "random" => {
                let n = need_n()?;
                let extra = self.extra.unwrap_or(0);
                let seed = self.seed.unwrap_or(42);
                plain(
                    random_connected_graph(n, extra, seed)?,
                    format!("random(n={n},extra={extra},seed={seed})"),
                )
            }
            _ => return Err(unknown_family(name)),
        })
    }
}

fn tnd(r: Vec<usize>) -> Result<Generated, CliError> {
    let (spec, canonicalized) = TndSpec::new(r)?;
    Ok(Generated {
        graph: t_tree(&spec),
        label: format!("T({})", join(spec.pendants())),
        canonicalized,
    })
}

fn unknown_family(name: &str) -> CliError {
    CliError::Usage(format!(
        "unknown family `{name}` (expected one of: {})",
        FAMILIES.join(", ")
    ))
}
