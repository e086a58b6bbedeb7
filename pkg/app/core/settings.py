"""
This module provides auxiliary functions to handle the run configuration and files writing and loading.

A run is described by a JSON document with the keys ``format_version``, ``experiment``,
``output_dir`` and ``params``. The experiment defaults are stored in
``app/config/expconf``, the admissible keys in ``app/config/inputs/valid_settings.json``.
Parameters are resolved as command-line flags > config file > defaults.

Attributes:
    FORMAT_VERSION (str): The only supported configuration format version.
    settings (dict): A shared dictionary of settings accross the framework.
"""

# Import native packages
import json
import os
from pathlib import Path
from shutil import copyfile

# Import custom packages
from core.constants import CONSTANTS_VERSION, constants_table
from core.errors import ConfigError

FORMAT_VERSION = "1"
TOP_LEVEL_KEYS = ("format_version","experiment","output_dir","params")

def _reject_duplicates(pairs):
    data = {}
    for key, value in pairs:
        if key in data:
            raise ConfigError(f"Duplicate key '{key}'")
        data[key] = value

    return data

def _reject_constant(name):
    raise ConfigError(f"Non-standard JSON constant '{name}' is not allowed")

def load_json(file):
    """
    Read a JSON file in strict mode.

    Args:
        file (str): Path and name of the file to be loaded, the ".json" suffix is optional.

    Returns:
        data (dict): The loaded data.

    Raises:
        ConfigError: If the file is missing, malformed, or uses duplicate keys or NaN constants.
    """
    if not file.endswith(".json"):
        file += ".json"
    try:
        with open(file,"r",encoding="utf-8") as f:
            data = json.load(f,object_pairs_hook=_reject_duplicates,parse_constant=_reject_constant)
    except FileNotFoundError:
        raise ConfigError(f"File {file} not found")
    except json.JSONDecodeError as err:
        raise ConfigError(f"{file}: line {err.lineno}, column {err.colno}: {err.msg}")

    return data

def dump_json(file,data):
    """
    Writes a JSON file.

    Args:
        file (str): Path and name of the file to be written, the ".json" suffix is optional.
        data (dict): The data to be saved.
    """
    if not file.endswith(".json"):
        file += ".json"
    with open(file,"w",encoding="utf-8",newline="\n") as f:
        json.dump(data,f,indent=1)
        f.write("\n")

def get_input_from_id(problem_id,problem_folder):
    """
    Get filename from problem ID.

    Args:
        problem_id (int): ID of the input to be run.
        problem_folder (str): Directory which contains the input files.

    Returns:
        file (str): Path to the input file of the requested ID.
    """
    matching_ids = [name for name in os.listdir(problem_folder) if name.startswith(str(problem_id).zfill(3))]
    if len(matching_ids) == 1:
        file_name = matching_ids[0].replace(".json","")
    elif len(matching_ids) == 0:
        raise ConfigError(f"Input for ID {problem_id} undefined")
    else:
        raise ConfigError(f"ID {problem_id} input multiple defined")

    if not (file_name[:3].isdigit() and file_name[3] == "-"):
        raise ConfigError('Invalid input file name, should start with "XXX-" where XXX is the input ID')

    file = os.path.join(problem_folder,file_name)

    return file

def load_defaults(experiment):
    """
    Load the default parameters of an experiment.

    Args:
        experiment (str): Name of the experiment.

    Returns:
        defaults (dict): Default parameters.
    """
    path = os.path.join(settings["root"],"app","config","expconf",experiment)

    return load_json(path)

def check_valid_settings():
    """
    Check that the experiment, its parameter keys and enumerated values are valid.

    Raises:
        ConfigError: On the first invalid entry, naming its key.
    """
    path = os.path.join(settings["root"],"app","config","inputs","valid_settings")
    valid = load_json(path)

    experiment = settings["experiment"]
    if experiment not in valid["experiments"]:
        raise ConfigError(f"Invalid setting for experiment, valid keys are: [{', '.join(valid['experiments'])}]")

    allowed = valid["experiments"][experiment]
    for key in settings["params"]:
        if key not in allowed:
            raise ConfigError(f"Unknown key 'params.{key}' for experiment {experiment}, valid keys are: [{', '.join(allowed)}]")

    for key, choices in valid["choices"].items():
        if key in settings["params"] and settings["params"][key] not in choices:
            raise ConfigError(f"Invalid setting for {key}, valid keys are: [{', '.join(map(str,choices))}]")

def resolve_config(config=None,experiment=None,overrides=None,output_dir=None):
    """
    Updates the shared settings dictionary from defaults, a config document and flag overrides.

    Args:
        config (dict/None): Parsed configuration document.
        experiment (str/None): Experiment requested on the command line.
        overrides (dict/None): Parameter values given as command-line flags.
        output_dir (str/None): Output directory given on the command line.

    Raises:
        ConfigError: On unknown keys, version mismatch or inconsistent experiment names.
    """
    config = {} if config is None else config
    overrides = {} if overrides is None else overrides

    # Reset
    keep = settings["root"]
    settings.clear()
    settings["root"] = keep

    # Top level
    for key in config:
        if key not in TOP_LEVEL_KEYS:
            raise ConfigError(f"Unknown key '{key}', valid keys are: [{', '.join(TOP_LEVEL_KEYS)}]")
    if config and config.get("format_version") != FORMAT_VERSION:
        raise ConfigError(f"Unsupported format_version {config.get('format_version')!r}, expected \"{FORMAT_VERSION}\"")

    file_experiment = config.get("experiment")
    if experiment and file_experiment and experiment != file_experiment:
        raise ConfigError(f"Config is for experiment {file_experiment}, not {experiment}")
    settings["experiment"] = experiment or file_experiment
    if settings["experiment"] is None:
        raise ConfigError("No experiment specified")
    if not isinstance(config.get("params",{}),dict):
        raise ConfigError("'params' must be an object")

    # Parameters
    settings["params"] = {}
    settings["params"].update(config.get("params",{}))
    settings["params"].update({key:value for key, value in overrides.items() if value is not None})
    check_valid_settings()
    params = load_defaults(settings["experiment"])
    params.update(settings["params"])
    settings["params"] = params

    settings["format_version"] = FORMAT_VERSION
    settings["output_dir"] = output_dir or config.get("output_dir") or os.path.join("data",settings["experiment"])

def make_workfolder(input_file=None):
    """
    Initialize the output directory.

    Args:
        input_file (str/None): Path of the config file to copy alongside the results.

    Returns:
        folder_path (str): Path to the current results data folder.
    """
    folder_path = settings["output_dir"]
    if not os.path.isabs(folder_path):
        folder_path = os.path.join(settings["root"],folder_path)
    logs_path = os.path.join(folder_path,"logs")

    Path(logs_path).mkdir(parents=True,exist_ok=True)
    if input_file is not None:
        if not input_file.endswith(".json"):
            input_file += ".json"
        copyfile(input_file,os.path.join(folder_path,"input.json"))

    settings["folder"] = folder_path

    return folder_path

def write_manifest(wall_time,artifacts):
    """
    Write the run manifest, the only artifact that carries non-deterministic data.

    Args:
        wall_time (float): Elapsed time of the run in seconds.
        artifacts (list): Names of the written files.
    """
    manifest = {"format_version":settings["format_version"],
                "experiment":settings["experiment"],
                "params":settings["params"],
                "constants_version":CONSTANTS_VERSION,
                "constants":constants_table,
                "artifacts":sorted(artifacts),
                "wall_time":wall_time}
    dump_json(os.path.join(settings["folder"],"manifest"),manifest)

# Initialize setting with the path to the root folder
settings = {"root": str(Path(__file__).resolve().parents[2])}
