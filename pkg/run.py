import sys, logging, argparse

from model import ConfigError
from module import (
    RunConfig,
    Sweeper,
    WeilTabulator,
    FixtureChecker,
    run_count,
    run_exception_table
)
from module.config import DEFAULT_CONFIG_PATH, OUTPUT_FORMATS



def build_parser():
    parser = argparse.ArgumentParser(
        description="Computational checks behind the mod-ell level-lowering of y^2 = x(x - 3^ell)(x - 3^ell - 1)."
    )
    parser.add_argument('--config', default=str(DEFAULT_CONFIG_PATH))
    parser.add_argument('--log-level', dest='log_level', default=None)
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help='verify every claim for each prime of a window')
    verify.add_argument('--ell-min', dest='ell_min', type=int)
    verify.add_argument('--ell-max', dest='ell_max', type=int)
    verify.add_argument('--jobs', dest='parallelism', type=int)
    verify.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS)

    commands.add_parser('fixtures', help='regression checks on the ell = 7 example curve')

    weil = commands.add_parser('weil-table', help='excluded-prime bounds by trace-field degree')
    weil.add_argument('--p', dest='weil_p', type=int)
    weil.add_argument('--max-degree', dest='weil_dmax', type=int)
    weil.add_argument('--jobs', dest='parallelism', type=int)
    weil.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS)
    weil.add_argument('--relaxed', dest='totally_real', action='store_false', default=None)

    count = commands.add_parser('count', help='points and trace of Frobenius of the curve for ell mod p')
    count.add_argument('--ell', type=int, required=True)
    count.add_argument('--p', type=int, required=True)

    exceptions = commands.add_parser('exceptions', help='irreducibility case analysis per prime')
    exceptions.add_argument('--ell-min', dest='ell_min', type=int)
    exceptions.add_argument('--ell-max', dest='ell_max', type=int)
    exceptions.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS)

    return parser



def load_config(args):
    overrides = {
        key: getattr(args, key, None)
        for key in ('ell_min', 'ell_max', 'parallelism', 'output_format',
                    'weil_p', 'weil_dmax', 'totally_real', 'log_level')
    }
    return RunConfig.from_yaml(args.config, **overrides)



def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args)
    except (ConfigError, OSError) as e:
        parser.error(str(e))

    logging.basicConfig(level=config.log_level.upper(), format='%(levelname)s %(name)s: %(message)s')
    if logging.getLogger().isEnabledFor(logging.DEBUG):
        config.print_attr()

    if args.command == 'verify':
        return Sweeper(config).run()

    elif args.command == 'fixtures':
        return FixtureChecker().run()

    elif args.command == 'weil-table':
        return WeilTabulator(config).run()

    elif args.command == 'count':
        return run_count(args.ell, args.p, output_format=config.output_format)

    elif args.command == 'exceptions':
        return run_exception_table(config)



if __name__ == '__main__':
    sys.exit(main())
