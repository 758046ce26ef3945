#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The kantele command-line entry point.
"""

import sys, os


def main(sysargs: list = None) -> None:
    """Parse the arguments, run the action and exit with 0 on success, 1 otherwise."""
    if sysargs is None:
        sysargs = sys.argv[1:]

    ### Check for a custom output root.
    if '--root-dir' in sysargs:
        import pathlib
        from kantele.actions.arguments._parse_arguments import parse_arguments
        from kantele.config._paths import set_root
        from kantele.config.static import _static_config
        env_var = _static_config()['environment']['root']
        if env_var in os.environ:
            print(f"WARNING: '{env_var}' is set, so --root-dir will be ignored.", file=sys.stderr)
        else:
            root = pathlib.Path(parse_arguments(sysargs)['root_dir']).absolute()
            root.mkdir(parents=True, exist_ok=True)
            set_root(root)

    ### Catch help flags.
    if '--help' in sysargs or '-h' in sysargs:
        from kantele.actions.arguments._parser import parse_help
        parse_help(sysargs)
        return _exit()

    ### Catch version flags.
    if '--version' in sysargs or '-V' in sysargs:
        from kantele.actions.arguments._parser import parse_version
        parse_version(sysargs)
        return _exit()

    from kantele.actions import entry
    return_tuple = entry(sysargs)
    rc = 0
    if isinstance(return_tuple, tuple):
        from kantele.utils.formatting import print_tuple
        print_tuple(return_tuple, upper_padding=1)
        rc = 0 if (return_tuple[0] is True) else 1
    return _exit(rc)


def _exit(return_code: int = 0) -> None:
    sys.exit(return_code)


if __name__ == "__main__":
    main(sys.argv[1:])
