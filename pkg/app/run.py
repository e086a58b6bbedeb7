"""
This is the main module of the framework.

Every experiment is a subcommand. Parameters come from the experiment defaults, an
optional JSON config (``--config`` or a numbered input selected with ``--id``) and the
command-line flags, in increasing precedence. Results, the copied input, the log and a
manifest are written to the output directory.

Example:
    python run.py rabi --dg-ratio 1 --output-dir data/rabi
    python run.py cz-sweep --id 4 --jobs 5

Attributes:
    EXIT_OK (int): Exit status of a successful run.
    EXIT_CONFIG (int): Exit status of a configuration error.
    EXIT_NUMERICAL (int): Exit status of a numerical failure.
    parameter_flags (dict): Command-line flags of the parameters and their types.
"""

# Import native packages
import argparse
import logging
import os
import sys
import time

# Import custom packages
from core.errors import ConfigError, NumericalError
from core.experiment import experiments
from core.settings import get_input_from_id, load_json, make_workfolder, resolve_config, settings, write_manifest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

def float_list(text):
    """
    Parse a comma separated list of floats.
    """
    try:
        return [float(value) for value in text.split(",") if value.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected a comma separated list of numbers, got {text!r}")

def build_parser():
    """
    Command-line parser with one subcommand per experiment.
    """
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--config",help="JSON run configuration")
    source.add_argument("--id",type=int,help="ID of a numbered input in app/inputs")
    common.add_argument("--output-dir",help="Output directory, relative paths are taken from the repository root")
    common.add_argument("--jobs",type=int,help="Worker processes for sweeps, TTRAP_JOBS by default")
    common.add_argument("--verbose",action="store_true",help="Log per-step diagnostics")
    for flag, (kind, text) in parameter_flags.items():
        if kind is bool:
            common.add_argument(flag,action="store_const",const=True,default=None,help=text)
        else:
            common.add_argument(flag,type=kind,default=None,help=text)

    parser = argparse.ArgumentParser(description="Temporally trapped chi(2) gate simulator")
    subparsers = parser.add_subparsers(dest="command",required=True)
    for name, experiment in experiments.items():
        subparsers.add_parser(name,parents=[common],help=experiment.__doc__.strip().splitlines()[0])

    return parser

def collect_overrides(args):
    """
    Parameter values given on the command line.
    """
    return {flag[2:].replace("-","_"):getattr(args,flag[2:].replace("-","_")) for flag in parameter_flags}

def resolve_jobs(jobs):
    """
    Number of worker processes, from --jobs or TTRAP_JOBS.

    Raises:
        ConfigError: If the value is not a positive integer.
    """
    if jobs is None:
        value = os.environ.get("TTRAP_JOBS","1")
        try:
            jobs = int(value)
        except ValueError:
            raise ConfigError(f"TTRAP_JOBS must be an integer, got {value!r}")
    if jobs < 1:
        raise ConfigError(f"Number of jobs must be positive, got {jobs}")

    return jobs

def configure_logging(verbose):
    """
    Console logging at INFO, or DEBUG with --verbose.
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,format=LOG_FORMAT,force=True)

def main(argv=None):
    """
    Run one experiment.

    Args:
        argv (list/None): Command-line arguments, sys.argv by default.

    Returns:
        (int): Exit status.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    handler = None
    try:
        input_file = None
        config = None
        if args.id is not None:
            input_file = get_input_from_id(args.id,os.path.join(settings["root"],"app","inputs"))
        elif args.config is not None:
            input_file = args.config
        if input_file is not None:
            config = load_json(input_file)

        output_dir = args.output_dir
        if output_dir is None and args.id is not None and "output_dir" not in config:
            output_dir = os.path.join("data",os.path.basename(input_file))
        resolve_config(config,args.command,collect_overrides(args),output_dir)
        jobs = resolve_jobs(args.jobs)

        folder = make_workfolder(input_file)
        handler = logging.FileHandler(os.path.join(folder,"logs","run.log"),mode="w",encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(handler)

        print(f"######### Running {settings['experiment']} #########")
        experiment = experiments[settings["experiment"]](settings["params"],folder,jobs)
        start = time.perf_counter()
        experiment.run()
        write_manifest(time.perf_counter()-start,experiment.artifacts)
        logger.info(f"Results written to {folder}")

    except NumericalError as err:
        logger.error(f"Numerical failure in {err.stage}: {err}")
        return EXIT_NUMERICAL
    except ValueError as err:
        logger.error(f"Configuration error: {err}")
        return EXIT_CONFIG
    finally:
        if handler is not None:
            logging.getLogger().removeHandler(handler)
            handler.close()

    return EXIT_OK

parameter_flags = {"--dg-ratio":(float,"Gap to coupling ratio Delta/g"),
                   "--dg-ratios":(float_list,"Comma separated Delta/g values of a sweep"),
                   "--dt":(float,"Normalized time step"),
                   "--n-grid":(int,"Number of fast-time samples, a power of two"),
                   "--box":(float,"Normalized fast-time window"),
                   "--alpha":(float,"Trap depth factor"),
                   "--rho":(float,"GVD ratio beta2_b/beta2_a"),
                   "--delta":(float,"Normalized phase mismatch"),
                   "--r-norm":(float,"Normalized interaction strength"),
                   "--n-modes":(int,"Eigenpairs solved per harmonic"),
                   "--scheme":(str,"Eigenproblem discretization, spectral or finite_difference"),
                   "--oversample":(int,"Sampling stride of a Rabi trace in steps"),
                   "--periods":(float,"Rabi propagation time in gate times"),
                   "--flux-every":(int,"Flux snapshot stride over the samples, 0 disables"),
                   "--sample-every":(int,"Sampling stride of a U_pi trace in steps, 0 disables"),
                   "--checkpoint":(bool,"Dump the final state"),
                   "--t-pi-grid":(float_list,"Comma separated gate times of the Gaussian sweep"),
                   "--tau-g-grid":(float_list,"Comma separated waveform widths of the Gaussian sweep")}

if __name__ == "__main__":
    sys.exit(main())
