"""Utility modules package"""
