from itertools import zip_longest
import shutil


def format_table(dat, header=None, default_termwidth=400):
    '''
    Lay out rows as fixed-width columns, shrinking the widest columns to fit the terminal

    Parameters
    ----------
    dat : iterable of tuple
        The rows. Every row has the same number of cells
    header : list of str, optional
        Column names, printed above a rule

    Returns
    -------
    str
    '''
    dat = list(dat)
    if not dat:
        return ''

    ncols = len(dat[0])
    rows = list(dat)
    if header:
        if ncols != len(header):
            raise ValueError('Width of header, {}, does not match width of data,'
                             ' {}'.format(len(header), ncols))
        rows = [header] + rows

    widths = [0] * ncols
    for row in rows:
        if len(row) != ncols:
            raise ValueError('Row widths are not consistent. Expected {}, but found row'
                             ' width of {}'.format(ncols, len(row)))
        widths = [max(w, _max_width(c)) for w, c in zip(widths, row)]

    termwidth, _ = shutil.get_terminal_size((default_termwidth, 0))
    while sum(widths) + ncols - 1 >= termwidth and max(widths) > 1:
        widest = widths.index(max(widths))
        widths[widest] -= 1

    fmt = ' '.join('{:' + str(w) + '}' for w in widths)
    lines = []
    for row in dat:
        for m in zip_longest(*(format(f).split('\n') for f in row), fillvalue=''):
            lines.append(fmt.format(*(it[:w] for it, w in zip(m, widths))))

    if header:
        lines.insert(0, '-' * max(len(m) for m in lines))
        lines.insert(0, fmt.format(*(format(f)[:w] for f, w in zip(header, widths))))
    return '\n'.join(lines)


def _max_width(s):
    return max(len(line) for line in str(s).split('\n'))
