'''
Create message logger for package.

Messages are echoed to stderr (stdout is reserved for results) and,
if a log file is set, written there as well.
'''

import sys
import logging

_logFile = ""
_verbosity = 0
_level = []
_initDone = False

_logger = logging.getLogger("palwidth")

def SetLogFile(fName):
    '''
    Set filename for output of message log
    '''
    global _logFile, _initDone

    _logFile = fName
    _initDone = False

def SetVerbosity(verbosity):
    '''
    Set console verbosity.
    0: only warnings are echoed
    1: info is echoed as well
    2: debug is echoed as well
    '''
    global _verbosity
    _verbosity = verbosity

def GetVerbosity():
    '''
    Get console verbosity (see 'SetVerbosity').
    '''
    return _verbosity

def _initLogging():
    '''
    Kick off message logging
    '''
    global _initDone

    if (not _initDone):
        for handler in list(_logger.handlers):
            _logger.removeHandler(handler)
            handler.close()

        # By default overwrite existing file
        handler = logging.FileHandler(_logFile, mode='w')
        handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        _logger.addHandler(handler)
        _logger.setLevel(logging.DEBUG)
        _logger.propagate = False
        _initDone = True

def LogMessage(s, severity=0):
    '''
    Add message 's' to log
    'severity' is an index
    <0: debug
    =0: info
    >0: warning
    '''
    t = (" "*(4*len(_level))) + s
    if (severity>0):
        print(s, file=sys.stderr)
    elif (severity==0 and _verbosity>=1) or (severity<0 and _verbosity>=2):
        print(t, file=sys.stderr)

    if (_logFile != ""):
        _initLogging()
        if (severity<0):
            _logger.debug(t)
        elif (severity>0):
            _logger.warning(s)
        else:
            _logger.info(t)

def IncreaseLevel(name):
    '''
    Increase logging nesting level.
    '''
    _level.append(name)

def DecreaseLevel(name):
    '''
    Decrease logging nesting level.
    'name' should match the one used in 'IncreaseLevel'.
    '''
    assert(_level[-1]==name)
    _level.pop()

class LogLevel:
    '''
    Nesting level to be used in a 'with' statement
    '''
    def __init__(self, name):
        self.name = name

    def __enter__(self):
        IncreaseLevel(self.name)
        return self.name

    def __exit__(self, exc_type, exc_inst, exc_traceback):
        DecreaseLevel(self.name)
