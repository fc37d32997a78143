'''
Palindromic width of free nilpotent groups: exact arithmetic,
palindrome factorizations and palindromic length certificates.
'''
