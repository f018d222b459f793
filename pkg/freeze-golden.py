import argparse
import logging
import time
from pathlib import Path

Path("logs/freeze-golden").mkdir(parents=True, exist_ok=True)
logging.basicConfig(
    filename=Path("logs")
    / "freeze-golden"
    / f"execution-{time.strftime('%Y-%m-%d-%H-%M-%S')}.log",
    level=logging.INFO,
    filemode="w",
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

from annseq import tabulate
from annseq.engine import SearchConfig, diff, naive_oracle, search
from annseq.utils import load_config

GOLDEN_DIR = Path("annseq") / "test" / "golden"


def freeze(max_dim: int, ceiling: int, logger: logging.Logger) -> bool:
    found = search(SearchConfig(max_dim=max_dim), logger.getChild("engine"))
    oracle = naive_oracle(max_dim, ceiling, logger=logger.getChild("oracle"))
    report = diff(found, oracle)
    if not report.empty:
        for line in report.lines():
            logger.error(line)
        print(f"search and oracle disagree up to {max_dim}, golden file not written")
        return False
    path = GOLDEN_DIR / f"search_{max_dim}.csv"
    with open(path, "w", encoding="ascii", newline="") as f:
        tabulate.emit(found, "csv", f)
    logger.info(f"Froze {found.total} sequences into {path}.")
    print(f"{path}: {found.total} sequences")
    return True


def main(args):
    logger = logging.getLogger("freeze-golden")
    config = load_config(args.config)
    ok = all([freeze(max_dim, config["search"]["oracle_ceiling"], logger) for max_dim in args.max_dims])
    if not ok:
        raise SystemExit(1)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--config", type=str, default="configs/default_config.toml")
    parser.add_argument("--max-dims", type=int, nargs="+", default=[1024])
    main(parser.parse_args())
