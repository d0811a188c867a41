'''
Reads the summary and ``Parameters`` section of numpydoc docstrings, which is all the
command line wrapper needs from them
'''
from collections import namedtuple
from textwrap import dedent
import re

PARAMETER_REGEX = r'''
^(?P<param_name>\w+)(?:\s+:\s+(?P<param_type>.+))?\n
(?P<param_description>(^[ ]{4}(?:(\S.*|)\n))+)
'''

DOCSTRING_REGEX = r'''
(?P<desc>(?:(^\S.*)?\n)+(?:^\n+(?=Parameters)))?
(^Parameters\n
^-+\n
(?P<parameters>(?:{parameter_regex})+))?
'''.format(parameter_regex=PARAMETER_REGEX)

REFERENCE_REGEX = r'`\s*(?P<tilde>~)?(?P<text>[^`<]+)(\s+<(?P<paren>[^>]+)>)?`'

RE = re.compile(DOCSTRING_REGEX, flags=re.VERBOSE | re.MULTILINE)
PARAM_RE = re.compile(PARAMETER_REGEX, flags=re.VERBOSE | re.MULTILINE)
FIRST_LINE_RE = re.compile(r'^\S.*\n+(?P<indent>\s+)', flags=re.MULTILINE)
REFERENCE_RE = re.compile(REFERENCE_REGEX, flags=re.MULTILINE)

ParamInfo = namedtuple('ParamInfo', ('name', 'val_type', 'desc'))
''' A documented parameter: its name, its type as written (or `None`) and description '''


def _plain_reference(md):
    text = md.group('text')
    if md.group('tilde'):
        text = text.split('.')[-1]
    paren = md.group('paren')
    if paren:
        return '{} ({})'.format(text, paren)
    return text


def _normalize(text):
    # A docstring whose text starts on the quote line has its first line unindented
    md = FIRST_LINE_RE.match(text)
    if md:
        text = md.group('indent') + text
    if text.startswith('\n'):
        text = text[1:]
    return dedent(text)


def parse(text):
    '''
    Parse a docstring

    Returns
    -------
    dict
        With ``desc``, the text before ``Parameters`` with cross-references made plain,
        and ``parameters``, a list of `ParamInfo`
    '''
    text = _normalize(text)
    resp = {}
    md = RE.match(text)
    if md:
        desc = md.group('desc')
        resp['desc'] = desc and REFERENCE_RE.sub(_plain_reference, desc)
        resp['parameters'] = [
            ParamInfo(pmd.group('param_name').strip(),
                      pmd.group('param_type') and pmd.group('param_type').strip(),
                      pmd.group('param_description').strip())
            for pmd in PARAM_RE.finditer(md.group('parameters') or '')]

    if not resp.get('desc') and not resp.get('parameters'):
        resp['desc'] = REFERENCE_RE.sub(_plain_reference, text.strip())
    return resp
