r'''
Coloured verdicts.

(c) conecalc developers, MIT
'''


def theme(theme=None):
    r'''
Return dictionary of colors.

.. code-block:: python

    {
        'yes' : '...',
        'no' : '...',
        'undetermined' : '...',
        'bright' : '...',
    }

:param str theme: Select color-theme (``'dark'`` or ``'none'``).

:rtype: dict
    '''

    if theme == 'dark':
        return \
        {
            'yes' : '1;32',
            'no': '1;31',
            'undetermined' : '1;33',
            'bright' : '1;37',
        }

    return \
    {
        'yes' : '',
        'no': '',
        'undetermined' : '',
        'bright' : '',
    }


class String:
    r'''
Rich string.

.. note::

    All options are attributes, that can be modified at all times.

:type data: str, None
:param data: The data.

:type width: None, int
:param width: Print width (formatted print only).

:type color: None, str
:param color: Print color, e.g. "1;32" for bold green (formatted print only).

:type align: ``'<'``, ``'>'``
:param align: Print alignment (formatted print only).
    '''

    def __init__(self, data, width=None, align='<', color=None):

        self.data  = data
        self.width = width
        self.color = color
        self.align = align

    def format(self):
        r'''
Return formatted string: align/width/color are applied.
        '''

        if self.width:
            fmt = '{{0:{align:s}{width:d}s}}'.format(**self.__dict__)
        else:
            fmt = '{{0:{align:s}s}}'.format(**self.__dict__)

        if self.color:
            fmt = '\x1b[' + self.color + 'm' + fmt + '\x1b[0m'

        return fmt.format(str(self))

    def __str__(self):
        return str(self.data)

    def __repr__(self):
        return str(self)


def verdict(value, theme_name='none'):
    r'''
Format a verdict (``'Yes'``, ``'No'``, ``'Undetermined'``, ``True``, ``False``) in its theme color.
    '''

    text = {True: 'true', False: 'false'}.get(value, value) if isinstance(value, bool) else str(value)
    key = {'yes': 'yes', 'true': 'yes', 'no': 'no', 'false': 'no'}.get(text.lower(), 'undetermined')

    return String(text, color=theme(theme_name)[key]).format()
