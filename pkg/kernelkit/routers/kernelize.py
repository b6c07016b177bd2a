import json
import sys

from kernelkit.models.schemas import stats_of
from kernelkit.routers.common import load_instance, write_text
from kernelkit.services.harness import kernelize
from kernelkit.utils.instance_format import serialize_instance


def register(subparsers) -> None:
    p = subparsers.add_parser("kernelize", help="reduce an instance with its kernel")
    p.add_argument("file", help="instance file, '-' for stdin")
    p.add_argument("--param", choices=("xi", "coc"), default="xi", help="ECS parameter")
    p.add_argument("--json", action="store_true", help="statistics as JSON on stderr")
    p.add_argument("--trace", action="store_true", help="list every rule application")
    p.add_argument("--out", help="write the reduced instance here instead of stdout")
    p.set_defaults(handler=run)


def run(args) -> int:
    inst = load_instance(args.file)
    outcome = kernelize(inst, args.param)
    write_text(serialize_instance(outcome.reduced), args.out)

    stats = stats_of(outcome)
    if args.json:
        payload = stats.model_dump()
        if args.trace:
            payload["trace"] = [step.model_dump() for step in outcome.trace]
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(
            f"decision={stats.decision} n={stats.n_in}->{stats.n_out} m={stats.m_in}->{stats.m_out} "
            f"k={stats.k_in}->{stats.k_out} |D|={stats.deletion_set_size} bound={stats.bound}",
            file=sys.stderr,
        )
        if args.trace:
            for step in outcome.trace:
                print(f"  {step.rule} v={list(step.vertices)} e={list(step.edges)} dk={step.k_delta}", file=sys.stderr)
    return 0
