'''
Hints for the CLI wrapper that help mapping from the Python methods to command line
arguments.

:CLI_HINTS: hints accepted by `~.cli_command_wrapper.CLICommandWrapper`

Hints are keyed by the fully-qualified name of the command class, then by method or
attribute name. Method hints are keyed by ``(METHOD_NAMED_ARG, parameter_name)`` and may
give ``names`` (a name without dashes makes a positional argument), ``nargs`` and
``choices``. The ``IGNORE`` entry lists attributes that are not options.
'''

from .cli_common import METHOD_NAMED_ARG

SIDES = ['full', 'half']

CLI_HINTS = {
    'lpp_growth.command.LPP': {
        'verify': {
            (METHOD_NAMED_ARG, 'side'): {
                'names': ['side'],
                'choices': SIDES,
            },
            (METHOD_NAMED_ARG, 'mode'): {
                'choices': ['exact', 'mc'],
            },
        },
        'measure': {
            (METHOD_NAMED_ARG, 'side'): {
                'choices': SIDES,
            },
        },
        'enumerate': {
            (METHOD_NAMED_ARG, 'side'): {
                'choices': SIDES,
            },
        },
        'observe': {
            (METHOD_NAMED_ARG, 'matrix'): {
                'names': ['matrix'],
            },
        },
        'rsk': {
            (METHOD_NAMED_ARG, 'filling'): {
                'names': ['filling'],
            },
        },
        'rsk_inverse': {
            (METHOD_NAMED_ARG, 'sequence'): {
                'names': ['sequence'],
            },
        },
        'layers': {
            (METHOD_NAMED_ARG, 'chains'): {
                'names': ['chains'],
            },
        },
        'fuzz': {
            (METHOD_NAMED_ARG, 'mutant'): {
                'choices': ['swap-min-max'],
            },
        },
        'IGNORE': ['progress_reporter', 'conf', 'get', 'int_value', 'default_config'],
    },
}
