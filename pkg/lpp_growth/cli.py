import sys
import json
from fractions import Fraction
from os.path import splitext
import logging.config as LC
import logging
import types

import numpy as np
from tqdm import tqdm
import yaml

from .cli_command_wrapper import CLICommandWrapper, CLIUserError
from .cli_hints import CLI_HINTS
from .command import LPP
from .command_util import GeneratorWithData, GenericUserError
from .text_util import format_table
from .utils import FCN

L = logging.getLogger(__name__)

USER_ERROR_STATUS = 2
''' Exit status for errors in the user's input, matching `argparse` usage errors '''


def additional_args(parser):
    'Add some additional options specific to CLI'
    # The "Default is '<blah>'" part of help is to match the cli_command_wrapper output
    parser.add_argument('--output-mode', '-o', default='json',
            help='How to print the results of a command'
            ' (if any). Default is \'json\'',
            choices=['json', 'text', 'table'])
    parser.add_argument('--columns',
            help='Comma-separated list of columns to display in "table" output mode')
    parser.add_argument('--text-pair-separator', default='\t',
            help=r'Separator to use between key and value in "text" output mode. Default is'
            r" '\t' (tab character)")
    parser.add_argument('--text-field-separator', default='\n',
            help=r'Separator to use between fields in "text" output mode. Default is'
            r" '\n' (newline character)")
    parser.add_argument('--text-record-terminator', default='\n',
            help='Terminator to use after each record in "text" output mode. Default is'
            r" '\n' (newline character)")
    parser.add_argument('--progress',
            help='Progress reporter to use. Default is \'none\'',
            choices=['tqdm', 'none'],
            default='none')
    parser.add_argument('--full-trace',
            help='Show full stack trace for all uncaught exceptions.',
            action='store_true')
    parser.add_argument('--logging-config',
            help='Set the logging config file')
    parser.add_argument('--log-level',
            help='Set the root log level. Default is \'WARNING\'',
            default='WARNING')


def parse_progress(s):
    if s == 'tqdm':
        return tqdm


def die(message, status=1):
    print(message, file=sys.stderr)
    raise SystemExit(status)


NOT_SET = object()


class NSHandler(object):
    def __init__(self, command, **kwargs):
        self.command = command
        self.opts = dict(kwargs)

    def __getitem__(self, k):
        return self.opts[k]

    def __getattr__(self, k, default=NOT_SET):
        if default is NOT_SET:
            try:
                return self.opts[k]
            except KeyError as e:
                raise AttributeError(k) from e
        else:
            return self.opts.get(k, default)

    def __call__(self, ns):
        for k in ('output_mode', 'text_pair_separator', 'text_field_separator',
                  'text_record_terminator', 'columns', 'full_trace'):
            self.opts[k] = getattr(ns, k)
        prog = parse_progress(ns.progress)
        if prog:
            self.command.progress_reporter = prog
        if ns.log_level is not None:
            try:
                level = getattr(logging, ns.log_level.upper())
            except AttributeError:
                die('Unknown log level {!r}'.format(ns.log_level), USER_ERROR_STATUS)
            logging.getLogger().setLevel(level)

        if ns.logging_config:
            cfg_fname = ns.logging_config
            try:
                _, ext = splitext(cfg_fname)
                if ext in ('.yml', '.yaml', '.json'):
                    with open(cfg_fname) as f:
                        LC.dictConfig(yaml.safe_load(f))
                else:
                    LC.fileConfig(cfg_fname)
            except Exception:
                print('Unable to load logging configuration from a file', file=sys.stderr)
                raise
        else:
            logging.basicConfig()

    def __str__(self):
        return 'NSHandler' + str(self.opts)


class JSONSerializer(object):
    ''' Encodes the values `json` cannot: exact rationals as "p/q" and numpy scalars '''

    def __call__(self, o):
        if hasattr(o, 'to_json'):
            return o.to_json()
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        return list(o)


def _select(a, indexes):
    return [h for i, h in enumerate(a) if i in indexes]


def columns_arg_to_list(arg):
    return [s.strip() for s in arg.split(',')]


def main(*args):
    '''
    Entry point for the command line interface.

    See `CLICommandWrapper` for details on how the command line options are constructed
    from `~lpp_growth.command.LPP`.

    Parameters
    ----------
    *args
        Arguments to the command. Used instead of `sys.argv`
    '''
    p = LPP()
    try:
        _helper(p, args=(args or None))
    except (CLIUserError, GenericUserError) as e:
        s = str(e)
        if not s:
            # In case someone forgets to add a helpful message for their user error
            s = 'Received error: ' + FCN(type(e))
        die(s, USER_ERROR_STATUS)


def _helper(p, args=None):
    ns_handler = NSHandler(p)
    try:
        out = CLICommandWrapper(p, hints_map=CLI_HINTS).main(
                args=args,
                argument_callback=additional_args,
                argument_namespace_callback=ns_handler)

        if out is not None:
            _format_output(out, ns_handler)
    except (GenericUserError, CLIUserError):
        try:
            if ns_handler.full_trace:
                import traceback
                traceback.print_exc()
        finally:
            raise
    status = getattr(out, 'exit_status', 0)
    if status:
        raise SystemExit(status)


def _is_stream(out):
    return isinstance(out, (GeneratorWithData, types.GeneratorType))


def _format_output(out, ns_handler):
    output_mode = ns_handler.output_mode
    text_pair_separator = ns_handler.text_pair_separator
    text_field_separator = ns_handler.text_field_separator
    text_record_terminator = ns_handler.text_record_terminator

    if output_mode == 'json':
        if _is_stream(out):
            for x in out:
                json.dump(x, sys.stdout, default=JSONSerializer())
                print()
        else:
            if hasattr(out, 'to_json'):
                out = out.to_json()
            json.dump(out, sys.stdout, default=JSONSerializer(), indent=2)
            print()
    elif output_mode == 'table':
        # `out.header` names the columns and `out.columns` holds an accessor for each.
        # Outputs without columns are shown as a single "Value" column.
        if getattr(out, 'columns', None) and getattr(out, 'header', None):
            if ns_handler.columns:
                cols = columns_arg_to_list(ns_handler.columns)
                selected_columns = [i for i, e in enumerate(out.header) if e in cols]
                if not selected_columns or len(selected_columns) != len(cols):
                    die('The given list of columns is not valid for this command',
                        USER_ERROR_STATUS)
            elif getattr(out, 'default_columns', None):
                selected_columns = [i for i, e in enumerate(out.header)
                                    if e in out.default_columns]
            else:
                selected_columns = list(range(len(out.header)))
        elif ns_handler.columns:
            die('The given list of columns is not valid for this command',
                USER_ERROR_STATUS)
        else:
            if hasattr(out, 'to_json'):
                out = out.to_json()
            if isinstance(out, dict):
                out = [(k, json.dumps(v, default=JSONSerializer())) for k, v in out.items()]
                out = GeneratorWithData(out, header=['Key', 'Value'], columns=tuple)
            else:
                out = GeneratorWithData(out, columns=[lambda x: x], header=['Value'])
            selected_columns = list(range(len(out.header)))

        header = _select(out.header, selected_columns)
        columns = _select(out.columns, selected_columns)
        print(format_table((tuple(c(m) for c in columns) for m in out), header=header))
    elif output_mode == 'text':
        if hasattr(out, 'to_json'):
            out = out.to_json()
        if isinstance(out, dict):
            _print_record(out, text_pair_separator, text_field_separator)
            print(text_record_terminator, end='')
        elif isinstance(out, str):
            print(out)
        else:
            for x in out:
                if isinstance(x, dict):
                    _print_record(x, text_pair_separator, text_field_separator)
                else:
                    print(x, end='')
                print(text_record_terminator, end='')


def _print_record(record, pair_separator, field_separator):
    first = True
    for k, v in record.items():
        if not first:
            print(field_separator, end='')
        first = False
        if not isinstance(v, str):
            v = json.dumps(v, default=JSONSerializer())
        print('{}{}{}'.format(k, pair_separator, v), end='')


if __name__ == '__main__':
    main()
