from kernelkit.routers.common import write_text
from kernelkit.services.harness import random_instance
from kernelkit.utils.instance_format import serialize_instance
from kernelkit.utils.norm import resolve_kind


def register(subparsers) -> None:
    p = subparsers.add_parser("gen", help="reproducible random instance")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True, help="edge probability")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lists", action="store_true", help="random lists (el-* kinds)")
    p.add_argument("--out")
    p.set_defaults(handler=run)


def run(args) -> int:
    kind = resolve_kind(args.kind)
    inst = random_instance(kind, args.n, args.p, args.c, args.k, args.seed, args.lists)
    write_text(serialize_instance(inst), args.out)
    return 0
