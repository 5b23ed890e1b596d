import sys
import json
import pathlib


def ensure_pathlib_path(path):
    """``path`` as a pathlib.Path; None stays None."""
    if path is None or isinstance(path, pathlib.Path):
        return path
    return pathlib.Path(path)


def check_and_make_dir(dir_path):
    """
    Create ``dir_path`` and its parents if missing.

    :param dir_path: (str | pathlib.Path) the directory
    :return: (pathlib.Path)
    """
    dir_path = ensure_pathlib_path(dir_path)
    dir_path.mkdir(parents=True, exist_ok=True)
    return dir_path


def package_data_path(package_file, *parts):
    """
    Path of a data file shipped next to a module.

    :param package_file: (str) the ``__file__`` of the module owning the data
    :param parts: (str) path components below the module directory
    :return: (pathlib.Path)
    """
    return ensure_pathlib_path(package_file).parent.joinpath(*parts)


def load_json_argument(value):
    """
    Load a JSON command line argument.

    ``-`` reads stdin, ``@path`` reads a file, anything else is parsed inline.

    :param value: (str) the raw argument
    :return: (object) the decoded JSON value
    """
    if value == '-':
        return json.load(sys.stdin)
    if value.startswith('@'):
        with open(ensure_pathlib_path(value[1:]), 'r') as f:
            return json.load(f)
    return json.loads(value)


__all__ = ['ensure_pathlib_path', 'check_and_make_dir', 'package_data_path', 'load_json_argument']
