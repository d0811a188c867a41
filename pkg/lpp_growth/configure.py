'''
Configuration for lpp_growth: a configuration dictionary with deferred values, the run
configuration files the command line reads, and exact parsing of rational parameters.

Documented configuration values:

.. confval:: lpp.threads

    Cap on worker processes. Defaults to ``$LPP_THREADS``; unset means one worker.

.. confval:: lpp.state_budget

    Most states a brute-force oracle may visit before raising `~.exceptions.TooLarge`.

.. confval:: lpp.enumeration_budget

    Most weight assignments an exact comparison may enumerate before raising
    `~.exceptions.BudgetExceeded`.
'''
from collections import namedtuple
from fractions import Fraction
from os import environ
from os.path import dirname, realpath
import json
import numbers
import re

from .exceptions import BadConf, BadParameter


class ConfigValue(object):
    """ A value to be configured. Subclasses implement `get` """

    def get(self):
        raise NotImplementedError


class _C(ConfigValue):
    """ Stores a value and reports it back with `get` """

    def __init__(self, v):
        self.v = v

    def get(self):
        return self.v

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return repr(self.v)


class _NO_DEFAULT(object):
    def __repr__(self):
        return 'NO_DEFAULT'


NO_DEFAULT = _NO_DEFAULT()

_VAR_RE = re.compile(r'\$([A-Za-z0-9_]+)')


class Configuration(object):
    """
    A key-value store whose values may be computed when they are retrieved
    """

    def __init__(self, **initial_values):
        self._properties = dict()
        for x in initial_values:
            self._properties[x] = _C(initial_values[x])

    def __setitem__(self, pname, value):
        if not isinstance(value, ConfigValue):
            value = _C(value)
        self._properties[pname] = value

    def __getitem__(self, pname):
        return self._properties[pname].get()

    def __delitem__(self, pname):
        del self._properties[pname]

    def __iter__(self):
        return iter(self._properties)

    def items(self):
        for k, v in self._properties.items():
            yield (k, v.get())

    def __contains__(self, thing):
        return thing in self._properties

    def __str__(self):
        return "{\n" + (",\n".join(
            "\"%s\" : %s" % (k, repr(self._properties[k])) for k in self._properties)) + "\n}"

    def __len__(self):
        return len(self._properties)

    @classmethod
    def process_config(cls, config_dict, variables=None):
        '''
        Resolves variables in config values and creates an instance of this class

        String values may name environment variables as ``$NAME``. A variable that is not
        in the environment is looked up in `variables`; ``$HERE`` is the directory of
        :confval:`configure.file_location`. Values that resolve to the empty string become
        `None`.

        Parameters
        ----------
        config_dict : dict
            The source for the resulting config
        variables : dict, optional
            Fallback values for variables missing from the environment

        Returns
        -------
        Configuration
        '''
        c = cls()
        for k in config_dict:
            value = config_dict[k]
            if isinstance(value, str):
                def matchf(md):
                    match = md.group(1)
                    if not re.match(r'^[A-Za-z_]', match):
                        raise BadConf("'%s' is an invalid env-var name\n"
                                      "Env-var names must be alphanumeric "
                                      "and start with either a letter or '_'" % match)
                    res = environ.get(match, None)
                    if res is None:
                        if variables and match in variables:
                            res = variables[match]
                        elif match == 'HERE':
                            cfg_name = config_dict.get('configure.file_location')
                            res = cfg_name and dirname(realpath(cfg_name))
                    return '' if res is None else str(res)
                value = _VAR_RE.sub(matchf, value)
                value = None if value == '' else value
            c[k] = _C(value)
        return c

    @classmethod
    def open(cls, file_name):
        """
        Read a JSON configuration file

        Sets :confval:`configure.file_location` to the given file_name

        .. confval:: configure.file_location

            The location where a `.Configuration` was loaded from

        Parameters
        ----------
        file_name : str
            configuration file encoded as JSON

        Returns
        -------
        Configuration

        Raises
        ------
        BadConf
            If the file cannot be read or does not hold a JSON object
        """
        try:
            with open(file_name) as f:
                d = json.load(f)
        except OSError as e:
            raise BadConf('Could not open {}: {}'.format(file_name, e.strerror or e)) from e
        except json.JSONDecodeError as e:
            raise BadConf('Could not read {} as JSON: {}'.format(file_name, e)) from e
        if not isinstance(d, dict):
            raise BadConf('Configuration file {} must hold a JSON object'.format(file_name))
        d['configure.file_location'] = file_name
        return cls.process_config(d)

    def copy(self, other):
        """
        Copy configuration from another object into this one

        Parameters
        ----------
        other : dict or Configuration

        Returns
        -------
        Configuration
            self
        """
        if isinstance(other, Configuration):
            self._properties = dict(other._properties)
        elif isinstance(other, dict):
            for x in other:
                self[x] = other[x]
        return self

    def get(self, pname, default=NO_DEFAULT):
        """
        Get a value by its key. Unlike `dict.get`, a `KeyError` is raised for a missing
        key unless a `default` is given
        """
        val = self._properties.get(pname, None)
        if val is not None:
            return val.get()
        elif default is not NO_DEFAULT:
            return default
        else:
            raise KeyError(pname)


class ImmutableConfiguration(Configuration):
    def __setitem__(self, k, v):
        raise TypeError('\'{}\' object does not support item assignment'.format(repr(type(self))))


def default_config():
    '''
    The configuration lpp_growth runs with when no file is given

    Returns
    -------
    Configuration
    '''
    return Configuration.process_config({
        'lpp.threads': '$LPP_THREADS',
        'lpp.state_budget': 10 ** 7,
        'lpp.enumeration_budget': 10 ** 7,
    })


class Configurable(object):
    """ An object which can accept configuration """
    default_config = ImmutableConfiguration()

    def __init__(self, conf=None, **kwargs):
        super(Configurable, self).__init__(**kwargs)
        if conf is not None:
            if conf is self:
                raise ValueError('The \'conf\' of a Configurable cannot be itself')
            self.__conf = conf
        else:
            self.__conf = type(self).default_config

    @property
    def conf(self):
        return self.__conf

    @conf.setter
    def conf(self, conf):
        self.__conf = conf

    def get(self, pname, default=None):
        """
        Gets a config value from this `Configurable`'s `conf`
        """
        return self.conf.get(pname, default)

    def int_value(self, pname, default=None):
        '''
        A config value as an `int`, or `default` if it is unset

        Raises
        ------
        BadConf
            If the value is not an integer
        '''
        val = self.get(pname, None)
        if val is None:
            return default
        try:
            return int(val)
        except (TypeError, ValueError):
            raise BadConf('{} must be an integer, not {!r}'.format(pname, val))


_RATIONAL_RE = re.compile(r'^\s*[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)\s*$')


def parse_rational(value):
    '''
    Read an exact rational from a ``"p/q"`` string, a decimal string, or a number

    Floats are converted exactly, so ``0.3`` becomes the nearest binary fraction, not
    ``3/10``; write ``"3/10"`` for exact parameters.

    Parameters
    ----------
    value : str or int or fractions.Fraction or float

    Returns
    -------
    fractions.Fraction

    Raises
    ------
    BadParameter
        If `value` is not a rational
    '''
    if isinstance(value, bool):
        raise BadParameter('{!r} is not a rational number'.format(value))
    if isinstance(value, (numbers.Rational, float)):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise BadParameter('{!r} has a zero denominator'.format(value))
    raise BadParameter('{!r} is not a rational number; write it as "p/q"'.format(value))


def format_rational(value):
    ''' The ``"p/q"`` (or ``"p"``) spelling of a rational, as written to JSON '''
    return str(Fraction(value))


class RunConfig(namedtuple('RunConfig', ('side', 'path', 'params', 'seed'))):
    '''
    The settings of one run read from a JSON file given to ``lpp --config``

    ``{"side": "full", "path": {"start": [0, 2], "word": "RRDD"},
    "params": {"x": ["2/5", "3/10"], "y": ["1/2", "1/5"]}, "seed": 7}``

    Every key is optional; command line options override the file.
    '''

    SIDES = ('full', 'half')

    @classmethod
    def from_dict(cls, ob):
        '''
        Validate and convert a decoded configuration

        Raises
        ------
        BadConf
            If a key has the wrong form
        BadParameter
            If the parameters are out of range
        '''
        from .lpp import params_from_json
        from .paths import DownRightPath

        side = ob.get('side')
        if side is not None and side not in cls.SIDES:
            raise BadConf('side must be one of {}, not {!r}'.format(cls.SIDES, side))
        path = ob.get('path')
        if path is not None:
            try:
                path = DownRightPath.from_json(path)
            except ValueError as e:
                raise BadConf(str(e)) from e
        params = ob.get('params')
        if params is not None:
            params = params_from_json(params)
            if side is None:
                side = 'half' if 'c' in ob['params'] else 'full'
        seed = ob.get('seed')
        if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool) or
                                 seed < 0):
            raise BadConf('seed must be a non-negative integer, not {!r}'.format(seed))
        return cls(side, path, params, seed)

    @classmethod
    def from_conf(cls, conf):
        '''
        The run settings held in a `Configuration`, such as one from `Configuration.open`
        '''
        return cls.from_dict({k: conf[k] for k in cls._fields if k in conf})

    @classmethod
    def empty(cls):
        return cls(None, None, None, None)
