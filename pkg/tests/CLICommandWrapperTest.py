import unittest

from unittest.mock import Mock

from pytest import raises

from lpp_growth.command_util import IVar
from lpp_growth.cli_command_wrapper import CLICommandWrapper, CLIArgMapper, CLIUserError
from lpp_growth.cli_common import METHOD_NAMED_ARG, INSTANCE_ATTRIBUTE

from .TestUtilities import noexit, stdout, stderr


class CLICommandWrapperTest(unittest.TestCase):

    def test_method_sc(self):
        class A(object):
            def __init__(self):
                self.i = 0

            def sc(self):
                self.i += 1
        a = A()
        cm = CLICommandWrapper(a)
        parser = cm.parser()
        parser.parse_args(['sc'])
        cm.mapper.apply(a)
        self.assertEqual(a.i, 1)

    def test_method_underscore_name(self):
        class A(object):
            def __init__(self):
                self.i = 0

            def rsk_inverse(self):
                self.i += 1
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['rsk-inverse'])
        cm.mapper.apply(a)
        self.assertEqual(a.i, 1)

    def test_method_sc_doc(self):
        class A(object):
            def sc(self):
                ''' TEST_STRING '''
        a = A()
        cm = CLICommandWrapper(a)
        parser = cm.parser()
        self.assertIn('TEST_STRING', parser.format_help())

    def test_method_sc_doc_param(self):
        class A(object):
            def sc(self, opt):
                '''
                Test

                Parameters
                ----------
                opt : str
                    TEST_STRING
                '''
        a = A()
        cm = CLICommandWrapper(a)
        parser = cm.parser()
        with noexit(), stdout() as out:
            parser.parse_args(['sc', '--help'])
        self.assertIn('TEST_STRING', out.getvalue())

    def test_method_int_param(self):
        class A(object):
            def sc(self, count):
                '''
                Test

                Parameters
                ----------
                count : int
                    How many
                '''
                self.count = count
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['sc', '--count', '3'])
        cm.mapper.apply(a)
        self.assertEqual(a.count, 3)

    def test_method_bool_param(self):
        class A(object):
            def sc(self, loud=False):
                '''
                Test

                Parameters
                ----------
                loud : bool
                    Whether to shout
                '''
                self.loud = loud
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['sc', '--loud'])
        cm.mapper.apply(a)
        self.assertIs(a.loud, True)

    def test_method_underscore_param(self):
        class A(object):
            def sc(self, emit_hist=False):
                '''
                Test

                Parameters
                ----------
                emit_hist : bool
                    _
                '''
                self.emit_hist = emit_hist
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['sc', '--emit-hist'])
        cm.mapper.apply(a)
        self.assertTrue(a.emit_hist)

    def test_positional_hint(self):
        class A(object):
            def sc(self, side):
                '''
                Test

                Parameters
                ----------
                side : str
                    _
                '''
                self.side = side
        a = A()
        hints = {'sc': {(METHOD_NAMED_ARG, 'side'): {'names': ['side'],
                                                     'choices': ['full', 'half']}}}
        cm = CLICommandWrapper(a, hints=hints)
        cm.parser().parse_args(['sc', 'half'])
        cm.mapper.apply(a)
        self.assertEqual(a.side, 'half')

    def test_choices_hint(self):
        class A(object):
            def sc(self, side):
                '''
                Test

                Parameters
                ----------
                side : str
                    _
                '''
        a = A()
        hints = {'sc': {(METHOD_NAMED_ARG, 'side'): {'choices': ['full', 'half']}}}
        cm = CLICommandWrapper(a, hints=hints)
        with self.assertRaises(SystemExit), stderr():
            cm.parser().parse_args(['sc', '--side', 'quarter'])

    def test_ivar_default_str(self):
        class A(object):
            p = IVar(3)

            def sc(self):
                pass
        a = A()
        cm = CLICommandWrapper(a)
        parser = cm.parser()
        with noexit(), stdout() as out:
            parser.parse_args(['--help'])
        self.assertIn('Default is 3', out.getvalue())

    def test_ivar_default_append_doc(self):
        class A(object):
            p = IVar(3, doc='TEST_STRING')

            def sc(self):
                pass
        a = A()
        cm = CLICommandWrapper(a)
        parser = cm.parser()
        with noexit(), stdout() as out:
            parser.parse_args(['--help'])
        self.assertIn('TEST_STRING', out.getvalue())

    def test_ivar_set(self):
        class A(object):
            p = IVar(3)

            def sc(self):
                return self.p
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['--p', '7', 'sc'])
        self.assertEqual(cm.mapper.apply(a), '7')

    def test_ivar_property(self):
        class A(object):
            @IVar.property(1)
            def p(self):
                ''' TEST_STRING '''
                return self._p

            @p.setter
            def p(self, val):
                self._p = int(val)

            def sc(self):
                return self.p
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args(['--p', '5', 'sc'])
        self.assertEqual(cm.mapper.apply(a), 5)

    def test_ignored_method(self):
        class A(object):
            def sc(self):
                pass

            def hidden(self):
                pass
        a = A()
        cm = CLICommandWrapper(a, hints={'IGNORE': ['hidden']})
        self.assertNotIn('hidden', cm.parser().format_help())

    def test_no_sub_command(self):
        class A(object):
            def sc(self):
                pass
        a = A()
        cm = CLICommandWrapper(a)
        cm.parser().parse_args([])
        with self.assertRaises(CLIUserError), stderr():
            cm.mapper.apply(a)


class CLIArgMapperTest(unittest.TestCase):

    def test_named_args(self):
        cut = CLIArgMapper()
        sc_runner = Mock()
        cut.runners[None] = sc_runner
        cut.mappings[(METHOD_NAMED_ARG, 'name0')] = 4
        cut.mappings[(METHOD_NAMED_ARG, 'name1')] = 6

        cut.apply(Mock())
        sc_runner.assert_called_with(name0=4, name1=6)

    def test_unset_args_dropped(self):
        cut = CLIArgMapper()
        sc_runner = Mock()
        cut.runners[None] = sc_runner
        cut.mappings[(METHOD_NAMED_ARG, 'name0')] = None

        cut.apply(Mock())
        sc_runner.assert_called_with()

    def test_instance_attributes(self):
        cut = CLIArgMapper()
        cut.runners[None] = Mock()
        cut.mappings[(INSTANCE_ATTRIBUTE, 'threads')] = '2'
        runner = Mock()

        cut.apply(runner)
        assert runner.threads == '2'

    def test_missing_runner(self):
        cut = CLIArgMapper()
        cut.argparser = Mock()
        with raises(CLIUserError):
            cut.apply(Mock())
