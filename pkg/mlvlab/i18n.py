"""
Localization hooks for error messages and verdict reports.

Messages are plain English unless :func:`set_gettext` installs a translator.
"""
_gettext = None


def gettext(message):
    """
    Return the localized translation of message.

    .. note:: Without a prior call to :func:`set_gettext` the message is
              returned unchanged.
    """
    return message if not _gettext or message is None else _gettext(message)


def set_gettext(gettext):
    """
    Install the function used to localize messages (typically
    :func:`gettext.gettext` from the standard library), or ``None`` to reset.
    """
    global _gettext
    _gettext = gettext


def N_(message):
    """
    Mark a string constant as translatable without translating it yet.
    Translation happens when the message is rendered through :func:`gettext`.
    """
    return message


def format_message(message, **kwargs):
    """Translate ``message`` then interpolate ``kwargs`` into it."""
    return gettext(message).format(**kwargs)
