from fractions import Fraction
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from pytest import raises

from lpp_growth.configure import (Configuration, ConfigValue, Configurable,
                                  ImmutableConfiguration, default_config, parse_rational,
                                  format_rational, RunConfig)
from lpp_growth.exceptions import BadConf, BadParameter
from lpp_growth.lpp import FullSpaceParams, HalfSpaceParams
from lpp_growth.paths import DownRightPath


class ConfigureTest(unittest.TestCase):
    def test_fake_config(self):
        """ Try to retrieve a config value that hasn't been set """
        with self.assertRaises(KeyError):
            c = Configuration()
            c['not_a_valid_config']

    def test_literal(self):
        """ Assign a literal rather than a ConfigValue"""
        c = Configuration()
        c['seven'] = "coke"
        self.assertEqual(c['seven'], "coke")

    def test_ConfigValue(self):
        c = Configuration()

        class pipe(ConfigValue):
            def get(self):
                return "sign"
        c['seven'] = pipe()
        self.assertEqual("sign", c['seven'])

    def test_late_get(self):
        """ "get" shouldn't be called until the value is *dereferenced* """
        c = Configuration()
        a = {'t': False}

        class pipe(ConfigValue):
            def get(self):
                a['t'] = True
                return "sign"
        c['seven'] = pipe()
        self.assertFalse(a['t'])
        self.assertEqual(c['seven'], "sign")
        self.assertTrue(a['t'])

    def test_get_default(self):
        self.assertEqual(Configuration().get('x', 3), 3)

    def test_get_missing(self):
        with self.assertRaises(KeyError):
            Configuration().get('x')

    def test_read_from_file_fail(self):
        """ Fail on attempt to read configuration from a non-JSON file """
        tf = self.tempfile()
        print('{"z": ', file=tf)
        tf.close()
        try:
            with self.assertRaises(BadConf):
                Configuration.open(tf.name)
        finally:
            os.unlink(tf.name)

    def test_read_from_file_not_object(self):
        tf = self.tempfile()
        print('[1, 2]', file=tf)
        tf.close()
        try:
            with self.assertRaises(BadConf):
                Configuration.open(tf.name)
        finally:
            os.unlink(tf.name)

    def test_read_from_file_env_val_success(self):
        with patch.dict('os.environ', {'LPP_THREADS': '3'}):
            tf = self.tempfile()
            print('{"lpp.threads": "$LPP_THREADS"}', file=tf)
            tf.close()
            try:
                c = Configuration.open(tf.name)
                self.assertEqual(c['lpp.threads'], '3')
                self.assertEqual(c['configure.file_location'], tf.name)
            finally:
                os.unlink(tf.name)

    def test_read_from_file_env_val_fail_name(self):
        tf = self.tempfile()
        print('{"z": "$1StillNoGood"}', file=tf)
        tf.close()
        try:
            with self.assertRaises(BadConf):
                Configuration.open(tf.name)
        finally:
            os.unlink(tf.name)

    def test_read_from_file_env_val_no_recurse(self):
        with patch.dict('os.environ', {'ENV_VAR': 'myapikey', "ENV_VAR1": "$ENV_VAR"}):
            c = Configuration.process_config({"z": "$ENV_VAR1"})
            self.assertEqual(c['z'], '$ENV_VAR')

    def test_env_val_empty_string(self):
        with patch.dict('os.environ', {'ENV_VAR': ''}):
            c = Configuration.process_config({"z": "$ENV_VAR"})
            self.assertIsNone(c['z'])

    def test_env_val_not_defined(self):
        with patch.dict('os.environ', (), clear=True):
            c = Configuration.process_config({"z": "$ENV_VAR"})
            self.assertIsNone(c['z'])

    def test_env_val_multi_embedded(self):
        with patch.dict('os.environ', {'USER': 'dave', 'IS_SUPER': 'normal'}, clear=True):
            c = Configuration.process_config({"greeting": "Hello, $IS_SUPER $USER"})
            self.assertEqual(c['greeting'], 'Hello, normal dave')

    def test_variables_fallback(self):
        with patch.dict('os.environ', (), clear=True):
            c = Configuration.process_config({"z": "$SIZE"}, variables={'SIZE': 4})
            self.assertEqual(c['z'], '4')

    def test_environment_beats_variables(self):
        with patch.dict('os.environ', {'SIZE': '5'}, clear=True):
            c = Configuration.process_config({"z": "$SIZE"}, variables={'SIZE': 4})
            self.assertEqual(c['z'], '5')

    def test_non_string_untouched(self):
        c = Configuration.process_config({"z": 10 ** 7})
        self.assertEqual(c['z'], 10 ** 7)

    def test_here_varname(self):
        with patch.dict('os.environ', (), clear=True):
            tf = self.tempfile()
            dname = os.path.dirname(os.path.realpath(tf.name))
            print('{"z": "$HERE/car"}', file=tf)
            tf.close()
            try:
                c = Configuration.open(tf.name)
                self.assertEqual(c['z'], dname + '/car')
            finally:
                os.unlink(tf.name)

    def test_here_varname_root(self):
        with patch.dict('os.environ', (), clear=True):
            c = Configuration.process_config({'configure.file_location': '/blah.file',
                                              'z': '$HERE/car'})
            self.assertEqual(c['z'], '/car')

    def test_here_varname_override(self):
        with patch.dict('os.environ', {'HERE': 'there'}, clear=True):
            c = Configuration.process_config({'configure.file_location': '/blah.file',
                                              'z': '$HERE/car'})
            self.assertEqual(c['z'], 'there/car')

    def test_copy_dict(self):
        c = Configuration()
        c.copy({'a': 1})
        self.assertEqual(c['a'], 1)

    def test_copy_configuration(self):
        c = Configuration().copy(Configuration(a=2))
        self.assertEqual(c['a'], 2)

    def test_immutable(self):
        with self.assertRaises(TypeError):
            ImmutableConfiguration()['a'] = 1

    def test_dict_init(self):
        c = Configuration(x=4, y=3)
        self.assertEqual(4, c['x'])

    def test_iter(self):
        c = Configuration(x=2, y=1)
        self.assertEqual({'x', 'y'}, {s for s in c})

    def test_contains(self):
        c = Configuration(x=2, y=1)
        self.assertIn('x', c)

    @staticmethod
    def tempfile():
        return tempfile.NamedTemporaryFile(mode='w+', delete=False)


class DefaultConfigTest(unittest.TestCase):

    def test_threads_from_env(self):
        with patch.dict('os.environ', {'LPP_THREADS': '4'}):
            self.assertEqual(Configurable(conf=default_config()).int_value('lpp.threads'), 4)

    def test_threads_unset(self):
        with patch.dict('os.environ', (), clear=True):
            self.assertIsNone(default_config()['lpp.threads'])

    def test_budgets(self):
        c = default_config()
        self.assertEqual(c['lpp.state_budget'], 10 ** 7)
        self.assertEqual(c['lpp.enumeration_budget'], 10 ** 7)


class ConfigurableTest(unittest.TestCase):

    def test_init_empty(self):
        i = Configurable()
        self.assertEqual(Configurable.default_config, i.conf)

    def test_conf_self(self):
        i = Configurable()
        with self.assertRaises(ValueError):
            Configurable.__init__(i, conf=i)

    def test_get(self):
        i = Configurable(conf=Configuration(a=1))
        self.assertEqual(i.get('a'), 1)
        self.assertIsNone(i.get('b'))

    def test_int_value(self):
        i = Configurable(conf=Configuration(a='12'))
        self.assertEqual(i.int_value('a'), 12)

    def test_int_value_default(self):
        self.assertEqual(Configurable(conf=Configuration()).int_value('a', 3), 3)

    def test_int_value_bad(self):
        i = Configurable(conf=Configuration(a='many'))
        with self.assertRaises(BadConf):
            i.int_value('a')


class RationalTest(unittest.TestCase):

    def test_fraction_string(self):
        self.assertEqual(parse_rational('3/10'), Fraction(3, 10))

    def test_decimal_string(self):
        self.assertEqual(parse_rational('0.3'), Fraction(3, 10))

    def test_negative_string(self):
        self.assertEqual(parse_rational('-1/2'), Fraction(-1, 2))

    def test_int(self):
        self.assertEqual(parse_rational(2), 2)

    def test_float_exact(self):
        self.assertEqual(parse_rational(0.5), Fraction(1, 2))

    def test_bool(self):
        with self.assertRaises(BadParameter):
            parse_rational(True)

    def test_junk(self):
        with self.assertRaises(BadParameter):
            parse_rational('one half')

    def test_zero_denominator(self):
        with self.assertRaises(BadParameter):
            parse_rational('1/0')

    def test_none(self):
        with self.assertRaises(BadParameter):
            parse_rational(None)

    def test_format(self):
        self.assertEqual(format_rational(Fraction(6, 20)), '3/10')
        self.assertEqual(format_rational(2), '2')


class RunConfigTest(unittest.TestCase):

    def test_full(self):
        rc = RunConfig.from_dict({'side': 'full',
                                  'path': {'start': [0, 2], 'word': 'RRDD'},
                                  'params': {'x': ['2/5', '3/10'], 'y': ['1/2', '1/5']},
                                  'seed': 7})
        self.assertEqual(rc.path, DownRightPath((0, 2), 'RRDD'))
        self.assertIsInstance(rc.params, FullSpaceParams)
        self.assertEqual(rc.seed, 7)

    def test_side_inferred(self):
        rc = RunConfig.from_dict({'params': {'x': ['1/2'], 'c': '1/2'}})
        self.assertEqual(rc.side, 'half')
        self.assertIsInstance(rc.params, HalfSpaceParams)

    def test_bad_side(self):
        with self.assertRaises(BadConf):
            RunConfig.from_dict({'side': 'quarter'})

    def test_bad_path(self):
        with self.assertRaises(BadConf):
            RunConfig.from_dict({'path': {'word': 'RD'}})

    def test_bad_path_letters(self):
        with self.assertRaises(BadConf):
            RunConfig.from_dict({'path': {'start': [0, 1], 'word': 'RX'}})

    def test_bad_seed(self):
        with self.assertRaises(BadConf):
            RunConfig.from_dict({'seed': -3})

    def test_bool_seed(self):
        with self.assertRaises(BadConf):
            RunConfig.from_dict({'seed': True})

    def test_bad_params(self):
        with self.assertRaises(BadParameter):
            RunConfig.from_dict({'params': {'x': ['1/2']}})

    def test_empty(self):
        self.assertEqual(RunConfig.empty(), (None, None, None, None))


def test_run_config_from_open_file(tmpdir):
    p = tmpdir.join('run.json')
    p.write(json.dumps({'seed': 3, 'lpp.state_budget': 10}))
    assert RunConfig.from_conf(Configuration.open(str(p))).seed == 3


def test_run_config_side_from_environment(tmpdir):
    p = tmpdir.join('run.json')
    p.write(json.dumps({'path': {'start': [0, 1], 'word': 'RD'}, 'side': '$SIDE'}))
    with patch.dict('os.environ', {'SIDE': 'half'}):
        run = RunConfig.from_conf(Configuration.open(str(p)))
    assert run.side == 'half'


def test_open_not_object(tmpdir):
    p = tmpdir.join('run.json')
    p.write('[]')
    with raises(BadConf):
        Configuration.open(str(p))


def test_open_missing_file(tmpdir):
    with raises(BadConf, match='nowhere.json'):
        Configuration.open(str(tmpdir.join('nowhere.json')))
