from kernelkit.services.harness import SUITES, run_suite


def register(subparsers) -> None:
    p = subparsers.add_parser("suite", help="run randomized check suites, JSON lines on stdout")
    p.add_argument("names", nargs="*", help=f"suites to run (default all): {', '.join(SUITES)}")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--failures-only", action="store_true", help="print only failing records")
    p.set_defaults(handler=run)


def run(args) -> int:
    failed = 0
    for name in args.names or list(SUITES):
        records, summary = run_suite(name, args.trials, args.max_n, args.seed)
        for r in records:
            if r.status == "fail" or not args.failures_only:
                print(r.model_dump_json())
        print(summary.model_dump_json())
        failed += summary.failed
    return 1 if failed else 0
