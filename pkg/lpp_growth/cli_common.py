'''
Kinds of command line option, shared by the CLI hints and the wrapper that reads them
'''

INSTANCE_ATTRIBUTE = 'INSTANCE_ATTRIBUTE'
''' A top-level option that sets an attribute of the `~lpp_growth.command.LPP` object '''

METHOD_NAMED_ARG = 'METHOD_NAMED_ARG'
''' A sub-command option passed to the method as a keyword argument '''
