import argparse
import logging
import time
from pathlib import Path

Path("logs/scale-run").mkdir(parents=True, exist_ok=True)
logging.basicConfig(
    filename=Path("logs")
    / "scale-run"
    / f"execution-{time.strftime('%Y-%m-%d-%H-%M-%S')}.log",
    level=logging.INFO,
    filemode="w",
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

from annseq import tabulate
from annseq.engine import SearchConfig, search
from annseq.utils import load_config


def main(config):
    logger = logging.getLogger("scale-run")
    run = config["run"]
    search_config = SearchConfig(max_dim=run["max_dim"], shards=config["search"]["shards"])
    result = search(search_config, logger.getChild("engine"))
    logger.info(f"Total {result.total} sequences up to {run['max_dim']} in {result.elapsed:.1f} seconds.")
    logger.info(f"Per length: {result.counts}")

    out = Path(run["out"])
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="ascii", newline="") as f:
        tabulate.emit(result, config["output"]["format"], f)
    logger.info(f"Table written to {out}.")

    if result.total >= run["count_bound"]:
        logger.error(f"Count {result.total} is not below {run['count_bound']}.")
        raise SystemExit(1)
    print(f"{result.total} sequences up to dimension {run['max_dim']} (bound {run['count_bound']}).")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--config", type=str, default="configs/scale.toml")
    args = parser.parse_args()
    main(load_config(args.config))
