'''
General superclasses for exceptions in this package.

DomainError marks failures caused by the input (exit status 1 in the
command line tool), InvariantBreach marks failures that can only be a
bug in this package (exit status 2).
'''
class PWException(Exception):
    '''
    General superclass for exceptions in this package.
    '''
    def __init__(self, descr=""):
        Exception.__init__(self, descr)
        self._descr = descr

    def __str__(self):
        '''
        Implement base string representation.
        '''
        return self._descr

class DomainError(PWException):
    '''
    Bad input or violated precondition.
    '''
    pass

class InvariantBreach(PWException):
    '''
    Internal consistency failure, e.g. a constructed certificate
    that does not verify.
    '''
    def __init__(self, descr=""):
        PWException.__init__(self, "Internal invariant breached: " + descr)
