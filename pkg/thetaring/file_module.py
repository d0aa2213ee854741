from __future__ import annotations

from pathlib import Path
from typing import Any
import re
import yaml
import pandas as pd
from . import msg

def load_defaults(defaults_file: str=None) -> dict:
    """Reads the defaults.yml shipped with the package (or a given file)."""
    if defaults_file is None:
        defaults_file = Path(__file__).parent.joinpath(Path('defaults.yml'))
    with open(defaults_file, 'r') as file:
        defaults = yaml.safe_load(file)
    return defaults

def get_list_of_placeholders() -> list[str]:
    return load_defaults()['list_of_placeholders']

def get_default_value(key: str, command: str, primary: dict, fallback: dict) -> Any:
    """Get a key (e.g. primes) from the defaults list.

    1) Tries the command specific value (e.g. sum-primes)

    2) Returns the RunConfig default (e.g. RunConfig-primes)
    """

    if key not in fallback.keys():
        raise ValueError(f'Default value not defined for {key}!')

    command_value = None
    if primary.get(command.lower()) is not None:
        command_value = primary[command.lower()].get(key)

    if command_value is None:
        return fallback[key]
    return command_value

def add_suffix(filename: str, suffix: str) -> str:
    """Adds a suffix to a filename, e.g. FileName.txt -> FileName_new.txt"""
    if suffix == '':
        return filename

    if suffix[0] == '_':
        suffix = suffix[1:]

    if filename == '':
        return suffix

    filename_list = filename.split('.')

    if len(filename_list) == 1:
        return f'{filename}_{suffix}'
    else:
        filename = '.'.join(filename_list[0:-1])
        extension = f'{filename_list[-1]}'
        return f'{filename}_{suffix}.{extension}'

def replace_times(filename: str, dateformat: str, times: list) -> str:
    """Substitutes the strings #T0, #T1, ... in filename with time stamps
    from a list of times, using the format in dateformat.

    e.g. report_#T0.txt, ['2020-05-04 18:00'], %Y%m%d%H%M -> report_202005041800.txt
    """

    for ct, t in enumerate(times):
        filename = re.sub(f"#T{ct}", pd.Timestamp(t).strftime(dateformat), filename)

    return filename

def replace_objects(filename: str, dict_of_object_names: dict[str, str]) -> str:
    """Substitutes the strings #{Key} in filename with the given values.

    e.g. #Command_#Primes.json, {'Command': 'tower', 'Primes': '2-3-5'}
        -> tower_2-3-5.json
    """

    for obj_type, obj_name in dict_of_object_names.items():
        if obj_name is not None:
            filename = re.sub(f"#{obj_type}", str(obj_name), filename)

    return filename

def clean(filename: str, list_of_placeholders: list[str]=None) -> str:
    """ Cleans out the file name from possible unused placeholders, e.g.
    #Level, as given in the list.

    Also removes multiple underscores '___' etc.
    """
    if list_of_placeholders is None:
        list_of_placeholders = get_list_of_placeholders()

    for s in list_of_placeholders:
        filename = re.sub(s, '', filename)

    filename = re.sub("_{2,10}", '_', filename)
    filename = re.sub("_-_", '', filename)
    filename = re.sub("_-", '_', filename)
    filename = re.sub("_\\.", '.', filename)
    if filename and filename[-1] == '_':
        filename = filename[:-1]

    return filename

def add_folder_to_filename(filename: str, folder: str) -> str:
    return str(Path(folder).joinpath(filename))

def report_filepath(template: str, folder: str, dateformat: str, extension: str,
                    names: dict[str, str], time_stamp) -> Path:
    """Builds the path of a report file from a filename template.

    Placeholders are substituted from names and the time stamp, leftovers
    are cleaned away and the extension is added if the template has none.
    """
    filename = replace_objects(template, names)
    filename = replace_times(filename, dateformat, [time_stamp])
    filename = clean(filename)
    path = Path(add_folder_to_filename(filename, folder))
    if not path.suffix:
        path = path.with_suffix(f'.{extension}')
    return path

def create_folder(folder: Path) -> None:
    folder = Path(folder)
    if str(folder) and not folder.is_dir():
        msg.plain(f"Creating folder {str(folder)}")
        folder.mkdir(parents=True)
